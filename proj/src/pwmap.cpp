#include "pmdecomp/pwmap.hpp"

#include "pmdecomp/errors.hpp"

#include <algorithm>

namespace pmdecomp {

std::string to_string(const OrbitPoint& p) {
    return p.is_bullet() ? std::string("bullet") : to_string(p.value());
}

Model Model::create(std::vector<Rational> breakpoints, std::vector<Piece> pieces,
                    std::vector<Rational> extra_exceptional) {
    FinitePointSet s = FinitePointSet::of(breakpoints);
    for (auto& x : extra_exceptional) {
        std::vector<Rational> pts = s.points();
        pts.push_back(std::move(x));
        s = FinitePointSet::of(std::move(pts));
    }
    return create_with_exceptional(std::move(breakpoints), std::move(pieces), std::move(s));
}

Model Model::create_with_exceptional(std::vector<Rational> breakpoints,
                                     std::vector<Piece> pieces, FinitePointSet s) {
    if (breakpoints.size() < 2) {
        throw BadIntervalError("need at least two breakpoints");
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) {
            throw BadIntervalError("breakpoints must be strictly increasing");
        }
    }
    if (pieces.size() != breakpoints.size() - 1) {
        throw BadIntervalError("piece count must be breakpoint count minus one");
    }

    Model m;
    m.breakpoints_ = FinitePointSet::of(breakpoints);
    m.pieces_ = std::move(pieces);

    const Rational& lo = breakpoints.front();
    const Rational& hi = breakpoints.back();
    for (std::size_t k = 0; k < m.pieces_.size(); ++k) {
        const Piece& p = m.pieces_[k];
        if (p.slope == 0) {
            throw NonMonotonePieceError("piece " + std::to_string(k) + " has slope 0");
        }
        Rational v0 = p.slope * breakpoints[k] + p.intercept;
        Rational v1 = p.slope * breakpoints[k + 1] + p.intercept;
        ClosedInterval img{std::min(v0, v1), std::max(v0, v1)};
        if (img.lo < lo || img.hi > hi) {
            throw EscapesDomainError("piece " + std::to_string(k) + " image [" +
                                     to_string(img.lo) + ", " + to_string(img.hi) +
                                     "] leaves the domain");
        }
        m.piece_images_.push_back(std::move(img));
    }

    for (const auto& d : m.breakpoints_.points()) {
        if (!s.contains(d)) {
            throw SMissingBreakpointError("exceptional set misses breakpoint " + to_string(d));
        }
    }
    for (const auto& x : s.points()) {
        if (x < lo || x > hi) {
            throw OutOfDomainError("exceptional point " + to_string(x) + " outside the domain");
        }
    }
    m.exceptional_ = std::move(s);
    return m;
}

ClosedIntervalSet Model::domain_closed() const {
    return normalize_closed({{domain_lo(), domain_hi()}});
}

OpenIntervalSet Model::domain_open() const {
    return normalize({{domain_lo(), domain_hi()}});
}

std::optional<std::size_t> Model::piece_index(const Rational& x) const {
    const auto& d = breakpoints_.points();
    if (x <= d.front() || x >= d.back()) return std::nullopt;
    auto it = std::upper_bound(d.begin(), d.end(), x);
    std::size_t k = static_cast<std::size_t>(it - d.begin()) - 1;
    if (d[k] == x) return std::nullopt;
    return k;
}

OrbitPoint Model::eval(const OrbitPoint& x) const {
    if (x.is_bullet()) return x;
    const Rational& v = x.value();
    if (!in_domain(v)) {
        throw OutOfDomainError("point " + to_string(v) + " outside the domain");
    }
    if (exceptional_.contains(v)) return OrbitPoint::bullet();
    auto k = piece_index(v);
    // breakpoints are in S, so a non-exceptional point has a lap
    const Piece& p = pieces_[*k];
    return OrbitPoint(p.slope * v + p.intercept);
}

OpenIntervalSet Model::image_mod(const OpenIntervalSet& o) const {
    if (!o.empty() &&
        (o.intervals().front().lo < domain_lo() || o.intervals().back().hi > domain_hi())) {
        throw OutOfDomainError("image_mod input leaves the domain");
    }
    OpenIntervalSet fragments = split_at(o, exceptional_);
    std::vector<Interval> images;
    images.reserve(fragments.size());
    for (const auto& frag : fragments.intervals()) {
        // each fragment lies inside a single lap: S contains all breakpoints
        auto k = piece_index(frag.lo + (frag.hi - frag.lo) / 2);
        const Piece& p = pieces_[*k];
        Rational v0 = p.slope * frag.lo + p.intercept;
        Rational v1 = p.slope * frag.hi + p.intercept;
        images.push_back({std::min(v0, v1), std::max(v0, v1)});
    }
    return normalize(std::move(images));
}

OpenIntervalSet Model::preimage(const OpenIntervalSet& o) const {
    const auto& d = breakpoints_.points();
    std::vector<Interval> pulled;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Piece& p = pieces_[k];
        for (const auto& iv : o.intervals()) {
            Rational a = (iv.lo - p.intercept) / p.slope;
            Rational b = (iv.hi - p.intercept) / p.slope;
            if (p.slope < 0) std::swap(a, b);
            Rational lo = std::max(a, d[k]);
            Rational hi = std::min(b, d[k + 1]);
            if (lo < hi) pulled.push_back({lo, hi});
        }
    }
    // extra exceptional points inside a lap must be punched out again
    return split_at(normalize(std::move(pulled)), exceptional_);
}

FinitePointSet Model::preimage_points(const Rational& y) const {
    if (!in_domain(y)) {
        throw OutOfDomainError("point " + to_string(y) + " outside the domain");
    }
    const auto& d = breakpoints_.points();
    std::vector<Rational> pts;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Piece& p = pieces_[k];
        Rational x = (y - p.intercept) / p.slope;
        if (d[k] < x && x < d[k + 1] && !exceptional_.contains(x)) pts.push_back(std::move(x));
    }
    return FinitePointSet::of(std::move(pts));
}

std::vector<OrbitPoint> Model::forward_orbit(const Rational& x, std::size_t n) const {
    if (!in_domain(x)) {
        throw OutOfDomainError("orbit start " + to_string(x) + " outside the domain");
    }
    std::vector<OrbitPoint> orbit;
    orbit.reserve(n + 1);
    orbit.emplace_back(OrbitPoint(x));
    for (std::size_t i = 0; i < n; ++i) orbit.push_back(eval(orbit.back()));
    return orbit;
}

} // namespace pmdecomp
