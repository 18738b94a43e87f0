#pragma once

#include "pmdecomp/interval_set.hpp"
#include "pmdecomp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmdecomp {

// Affine branch x -> slope*x + intercept on one open lap.
struct Piece {
    Rational slope;
    Rational intercept;
    bool operator==(const Piece&) const = default;
};

// A point of an orbit: either a rational in the domain or the absorbing
// cemetery state that the exceptional set maps to.
class OrbitPoint {
public:
    static OrbitPoint bullet() { return OrbitPoint(); }
    explicit OrbitPoint(Rational v) : value_(std::move(v)) {}

    bool is_bullet() const { return !value_.has_value(); }
    const Rational& value() const { return *value_; }
    bool operator==(const OrbitPoint&) const = default;

private:
    OrbitPoint() = default;
    std::optional<Rational> value_;
};

std::string to_string(const OrbitPoint& p);

/// Validated model of an interval self-map: strictly monotone affine
/// pieces between consecutive breakpoints d_0 < ... < d_{p+1}, together
/// with the finite exceptional set S (all breakpoints plus optional extra
/// points). Evaluation sends S to the absorbing state; no value of the
/// underlying map at a point of S is ever part of the model.
///
/// Instances are immutable values; every operation is a pure function, so
/// models are safe to share across threads.
class Model {
public:
    // Throws NonMonotonePieceError / EscapesDomainError /
    // SMissingBreakpointError / OutOfDomainError when an invariant fails.
    static Model create(std::vector<Rational> breakpoints, std::vector<Piece> pieces,
                        std::vector<Rational> extra_exceptional = {});

    // Same checks, but S is given in full and must contain every breakpoint.
    static Model create_with_exceptional(std::vector<Rational> breakpoints,
                                         std::vector<Piece> pieces, FinitePointSet s);

    const FinitePointSet& breakpoints() const { return breakpoints_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const FinitePointSet& exceptional() const { return exceptional_; }

    const Rational& domain_lo() const { return breakpoints_.points().front(); }
    const Rational& domain_hi() const { return breakpoints_.points().back(); }
    ClosedIntervalSet domain_closed() const;
    OpenIntervalSet domain_open() const;
    Rational domain_length() const { return domain_hi() - domain_lo(); }

    // Closure of the image of piece k.
    const ClosedInterval& piece_image(std::size_t k) const { return piece_images_[k]; }

    // Index of the open lap containing x, or nullopt when x sits on a
    // breakpoint.
    std::optional<std::size_t> piece_index(const Rational& x) const;

    OrbitPoint eval(const OrbitPoint& x) const;

    // f(O \ S): splits O at S and pushes each open fragment through its
    // affine branch. Exact; the result is open.
    OpenIntervalSet image_mod(const OpenIntervalSet& o) const;

    // f^{-1}(O): per-branch affine solve, always disjoint from S.
    OpenIntervalSet preimage(const OpenIntervalSet& o) const;

    // All x in X \ S with f(x) == y; at most one per piece.
    FinitePointSet preimage_points(const Rational& y) const;

    // x, f(x), ..., f^n(x); absorbing once the orbit dies.
    std::vector<OrbitPoint> forward_orbit(const Rational& x, std::size_t n) const;

    bool in_domain(const Rational& x) const { return domain_lo() <= x && x <= domain_hi(); }

private:
    Model() = default;
    FinitePointSet breakpoints_;
    std::vector<Piece> pieces_;
    FinitePointSet exceptional_;
    std::vector<ClosedInterval> piece_images_;
};

} // namespace pmdecomp
