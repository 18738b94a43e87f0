#pragma once

#include "pmdecomp/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pmdecomp {

// Open interval (lo, hi), lo < hi.
struct Interval {
    Rational lo;
    Rational hi;
    bool operator==(const Interval&) const = default;
};

// Closed interval [lo, hi]; lo == hi is a single point.
struct ClosedInterval {
    Rational lo;
    Rational hi;
    bool operator==(const ClosedInterval&) const = default;
};

// Canonical finite union of open intervals: sorted, pairwise disjoint,
// hi_i <= lo_{i+1}. Exact touching (hi_i == lo_{i+1}) is a legal state and
// represents an open set that is not regular open: the shared endpoint is
// not a member. Only diamond/closure ever merge across a touching point.
class OpenIntervalSet {
public:
    OpenIntervalSet() = default;

    const std::vector<Interval>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    std::size_t size() const { return iv_.size(); }
    bool operator==(const OpenIntervalSet&) const = default;

    bool contains(const Rational& x) const;
    Rational measure() const;

private:
    friend OpenIntervalSet normalize(std::vector<Interval> raw);
    explicit OpenIntervalSet(std::vector<Interval> canonical) : iv_(std::move(canonical)) {}
    std::vector<Interval> iv_;
};

// Canonical finite union of closed intervals: sorted and maximally merged,
// consecutive pieces separated by positive gaps. Degenerate pieces are
// points.
class ClosedIntervalSet {
public:
    ClosedIntervalSet() = default;

    const std::vector<ClosedInterval>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    std::size_t size() const { return iv_.size(); }
    bool operator==(const ClosedIntervalSet&) const = default;

    bool contains(const Rational& x) const;

private:
    friend ClosedIntervalSet normalize_closed(std::vector<ClosedInterval> raw);
    explicit ClosedIntervalSet(std::vector<ClosedInterval> canonical) : iv_(std::move(canonical)) {}
    std::vector<ClosedInterval> iv_;
};

// Strictly increasing finite set of rational points.
class FinitePointSet {
public:
    FinitePointSet() = default;
    static FinitePointSet of(std::vector<Rational> pts); // sorts and dedupes

    const std::vector<Rational>& points() const { return pts_; }
    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    bool contains(const Rational& x) const;
    bool operator==(const FinitePointSet&) const = default;

private:
    std::vector<Rational> pts_;
};

// --- construction -----------------------------------------------------------

// Canonicalizes an arbitrary collection of open intervals. Overlapping
// inputs merge; exactly touching inputs stay adjacent-but-separate.
// Throws BadIntervalError when some lo >= hi.
OpenIntervalSet normalize(std::vector<Interval> raw);

ClosedIntervalSet normalize_closed(std::vector<ClosedInterval> raw);

// --- the diamond algebra ----------------------------------------------------

// int(cl(O)): merges touching pieces. Idempotent; O is regular open iff
// diamond(O) == O.
OpenIntervalSet diamond(const OpenIntervalSet& o);

bool is_regular_open(const OpenIntervalSet& o);

ClosedIntervalSet closure(const OpenIntervalSet& o);

OpenIntervalSet interior(const ClosedIntervalSet& f);

// cl(O) \ O: the canonical endpoints, including touching junctions.
FinitePointSet boundary(const OpenIntervalSet& o);

OpenIntervalSet set_union(const OpenIntervalSet& a, const OpenIntervalSet& b);

OpenIntervalSet intersect(const OpenIntervalSet& a, const OpenIntervalSet& b);

// int(X) \ cl(O) for a closed carrier X. Regular open for any open O.
OpenIntervalSet complement_in(const OpenIntervalSet& o, const ClosedIntervalSet& x);

// O2 \ cl(O1); regular open whenever both are, non-empty when O1 is a
// proper subset of O2 with both regular open.
OpenIntervalSet regular_difference(const OpenIntervalSet& o2, const OpenIntervalSet& o1);

// True iff A and B share a positive-length intersection. Touching is not
// meeting; invariant under diamond on both sides.
bool meets(const OpenIntervalSet& a, const OpenIntervalSet& b);

// A subseteq B as point sets.
bool subset(const OpenIntervalSet& a, const OpenIntervalSet& b);

bool subset_of_closed(const OpenIntervalSet& a, const ClosedIntervalSet& b);

ClosedIntervalSet closed_intersect(const ClosedIntervalSet& a, const ClosedIntervalSet& b);

ClosedIntervalSet closure_of_points(const FinitePointSet& pts);

// Splits the intervals of O at every point of cut that lies inside one.
// The union of points is unchanged minus the cut points.
OpenIntervalSet split_at(const OpenIntervalSet& o, const FinitePointSet& cut);

FinitePointSet point_union(const FinitePointSet& a, const FinitePointSet& b);

// Diamond of the union of gaps (p_i, p_{i+1}) between consecutive points
// whose distance is at most eps: the scale-eps regularization of a point
// cloud. Empty cloud or eps <= 0 gives the empty set.
OpenIntervalSet dense_run_hull(const FinitePointSet& cloud, const Rational& eps);

// --- debug / io helpers ------------------------------------------------------

std::string to_string(const OpenIntervalSet& o);
std::string to_string(const ClosedIntervalSet& f);
std::string to_string(const FinitePointSet& p);

} // namespace pmdecomp
