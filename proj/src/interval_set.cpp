#include "pmdecomp/interval_set.hpp"

#include "pmdecomp/errors.hpp"

#include <algorithm>

namespace pmdecomp {

namespace {

// Sweep-merge helper. merge_touching controls whether hi_i == lo_{i+1}
// collapses into one interval (diamond/closure semantics) or stays split
// (plain union semantics).
std::vector<Interval> sweep(std::vector<Interval> raw, bool merge_touching) {
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    std::vector<Interval> out;
    for (auto& iv : raw) {
        if (!out.empty()) {
            Interval& back = out.back();
            bool overlap = iv.lo < back.hi || (merge_touching && iv.lo == back.hi);
            if (overlap) {
                if (iv.hi > back.hi) back.hi = iv.hi;
                continue;
            }
        }
        out.push_back(std::move(iv));
    }
    return out;
}

} // namespace

bool OpenIntervalSet::contains(const Rational& x) const {
    auto it = std::upper_bound(iv_.begin(), iv_.end(), x,
                               [](const Rational& v, const Interval& iv) { return v < iv.hi; });
    return it != iv_.end() && it->lo < x && x < it->hi;
}

Rational OpenIntervalSet::measure() const {
    Rational total = 0;
    for (const auto& iv : iv_) total += iv.hi - iv.lo;
    return total;
}

bool ClosedIntervalSet::contains(const Rational& x) const {
    auto it = std::upper_bound(iv_.begin(), iv_.end(), x,
                               [](const Rational& v, const ClosedInterval& iv) { return v < iv.hi; });
    if (it != iv_.end() && it->lo <= x && x <= it->hi) return true;
    // upper_bound skips a piece whose hi equals x
    if (it != iv_.begin()) {
        --it;
        return it->lo <= x && x <= it->hi;
    }
    return false;
}

FinitePointSet FinitePointSet::of(std::vector<Rational> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    FinitePointSet out;
    out.pts_ = std::move(pts);
    return out;
}

bool FinitePointSet::contains(const Rational& x) const {
    return std::binary_search(pts_.begin(), pts_.end(), x);
}

OpenIntervalSet normalize(std::vector<Interval> raw) {
    for (const auto& iv : raw) {
        if (!(iv.lo < iv.hi)) {
            throw BadIntervalError("open interval needs lo < hi, got [" + to_string(iv.lo) +
                                   ", " + to_string(iv.hi) + ")");
        }
    }
    return OpenIntervalSet(sweep(std::move(raw), /*merge_touching=*/false));
}

ClosedIntervalSet normalize_closed(std::vector<ClosedInterval> raw) {
    for (const auto& iv : raw) {
        if (iv.lo > iv.hi) throw BadIntervalError("closed interval needs lo <= hi");
    }
    std::sort(raw.begin(), raw.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    std::vector<ClosedInterval> out;
    for (auto& iv : raw) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (iv.hi > out.back().hi) out.back().hi = iv.hi;
            continue;
        }
        out.push_back(std::move(iv));
    }
    return ClosedIntervalSet(std::move(out));
}

OpenIntervalSet diamond(const OpenIntervalSet& o) {
    return normalize(sweep(o.intervals(), /*merge_touching=*/true));
}

bool is_regular_open(const OpenIntervalSet& o) { return diamond(o) == o; }

ClosedIntervalSet closure(const OpenIntervalSet& o) {
    const OpenIntervalSet merged = diamond(o);
    std::vector<ClosedInterval> out;
    for (const auto& iv : merged.intervals()) out.push_back({iv.lo, iv.hi});
    return normalize_closed(std::move(out));
}

OpenIntervalSet interior(const ClosedIntervalSet& f) {
    std::vector<Interval> out;
    for (const auto& iv : f.intervals()) {
        if (iv.lo < iv.hi) out.push_back({iv.lo, iv.hi});
    }
    // pieces of a canonical closed set are separated by positive gaps
    return normalize(std::move(out));
}

FinitePointSet boundary(const OpenIntervalSet& o) {
    std::vector<Rational> pts;
    pts.reserve(2 * o.size());
    for (const auto& iv : o.intervals()) {
        pts.push_back(iv.lo);
        pts.push_back(iv.hi);
    }
    return FinitePointSet::of(std::move(pts));
}

OpenIntervalSet set_union(const OpenIntervalSet& a, const OpenIntervalSet& b) {
    std::vector<Interval> raw = a.intervals();
    raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
    return normalize(std::move(raw));
}

OpenIntervalSet intersect(const OpenIntervalSet& a, const OpenIntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    const auto& av = a.intervals();
    const auto& bv = b.intervals();
    while (i < av.size() && j < bv.size()) {
        Rational lo = std::max(av[i].lo, bv[j].lo);
        Rational hi = std::min(av[i].hi, bv[j].hi);
        if (lo < hi) out.push_back({lo, hi});
        if (av[i].hi < bv[j].hi) ++i; else ++j;
    }
    return normalize(std::move(out));
}

namespace {

// Open gaps of [a, b] \ cl(O) shoved onto `out`.
void subtract_closure(const Rational& a, const Rational& b,
                      const std::vector<ClosedInterval>& cl, std::vector<Interval>& out) {
    Rational cur = a;
    for (const auto& piece : cl) {
        if (piece.hi <= cur) continue;
        if (piece.lo >= b) break;
        if (piece.lo > cur) out.push_back({cur, piece.lo});
        cur = piece.hi;
        if (cur >= b) return;
    }
    if (cur < b) out.push_back({cur, b});
}

} // namespace

OpenIntervalSet complement_in(const OpenIntervalSet& o, const ClosedIntervalSet& x) {
    const auto cl = closure(o).intervals();
    std::vector<Interval> out;
    for (const auto& piece : x.intervals()) {
        if (piece.lo < piece.hi) subtract_closure(piece.lo, piece.hi, cl, out);
    }
    return normalize(std::move(out));
}

OpenIntervalSet regular_difference(const OpenIntervalSet& o2, const OpenIntervalSet& o1) {
    const auto cl = closure(o1).intervals();
    std::vector<Interval> out;
    for (const auto& iv : o2.intervals()) subtract_closure(iv.lo, iv.hi, cl, out);
    return normalize(std::move(out));
}

bool meets(const OpenIntervalSet& a, const OpenIntervalSet& b) {
    std::size_t i = 0, j = 0;
    const auto& av = a.intervals();
    const auto& bv = b.intervals();
    while (i < av.size() && j < bv.size()) {
        if (std::max(av[i].lo, bv[j].lo) < std::min(av[i].hi, bv[j].hi)) return true;
        if (av[i].hi < bv[j].hi) ++i; else ++j;
    }
    return false;
}

bool subset(const OpenIntervalSet& a, const OpenIntervalSet& b) {
    // any gap in b, even a single touching point, breaks coverage of an
    // open interval, so each piece of a must fit inside one piece of b
    const auto& bv = b.intervals();
    for (const auto& iv : a.intervals()) {
        auto it = std::upper_bound(bv.begin(), bv.end(), iv.lo,
                                   [](const Rational& v, const Interval& c) { return v < c.hi; });
        if (it == bv.end() || !(it->lo <= iv.lo && iv.hi <= it->hi)) return false;
    }
    return true;
}

bool subset_of_closed(const OpenIntervalSet& a, const ClosedIntervalSet& b) {
    const auto& bv = b.intervals();
    for (const auto& iv : a.intervals()) {
        auto it = std::upper_bound(bv.begin(), bv.end(), iv.lo,
                                   [](const Rational& v, const ClosedInterval& c) { return v < c.hi; });
        if (it == bv.end() || !(it->lo <= iv.lo && iv.hi <= it->hi)) return false;
    }
    return true;
}

ClosedIntervalSet closed_intersect(const ClosedIntervalSet& a, const ClosedIntervalSet& b) {
    std::vector<ClosedInterval> out;
    std::size_t i = 0, j = 0;
    const auto& av = a.intervals();
    const auto& bv = b.intervals();
    while (i < av.size() && j < bv.size()) {
        Rational lo = std::max(av[i].lo, bv[j].lo);
        Rational hi = std::min(av[i].hi, bv[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (av[i].hi < bv[j].hi) ++i; else ++j;
    }
    return normalize_closed(std::move(out));
}

ClosedIntervalSet closure_of_points(const FinitePointSet& pts) {
    std::vector<ClosedInterval> out;
    out.reserve(pts.size());
    for (const auto& p : pts.points()) out.push_back({p, p});
    return normalize_closed(std::move(out));
}

OpenIntervalSet split_at(const OpenIntervalSet& o, const FinitePointSet& cut) {
    std::vector<Interval> out;
    const auto& pts = cut.points();
    for (const auto& iv : o.intervals()) {
        Rational cur = iv.lo;
        auto it = std::upper_bound(pts.begin(), pts.end(), iv.lo);
        for (; it != pts.end() && *it < iv.hi; ++it) {
            if (*it > cur) out.push_back({cur, *it});
            cur = *it;
        }
        if (cur < iv.hi) out.push_back({cur, iv.hi});
    }
    return normalize(std::move(out));
}

FinitePointSet point_union(const FinitePointSet& a, const FinitePointSet& b) {
    std::vector<Rational> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return FinitePointSet::of(std::move(pts));
}

OpenIntervalSet dense_run_hull(const FinitePointSet& cloud, const Rational& eps) {
    std::vector<Interval> runs;
    if (eps <= 0) return {};
    const auto& pts = cloud.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] <= eps) runs.push_back({pts[i], pts[i + 1]});
    }
    return diamond(normalize(std::move(runs)));
}

std::string to_string(const OpenIntervalSet& o) {
    std::string s = "{";
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += ",";
        s += "(" + to_string(o.intervals()[i].lo) + "," + to_string(o.intervals()[i].hi) + ")";
    }
    return s + "}";
}

std::string to_string(const ClosedIntervalSet& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += "[" + to_string(f.intervals()[i].lo) + "," + to_string(f.intervals()[i].hi) + "]";
    }
    return s + "}";
}

std::string to_string(const FinitePointSet& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += to_string(p.points()[i]);
    }
    return s + "}";
}

} // namespace pmdecomp
