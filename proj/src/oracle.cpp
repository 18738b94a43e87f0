#include "pmdecomp/oracle.hpp"

#include "pmdecomp/errors.hpp"

#include <algorithm>
#include <map>

namespace pmdecomp {

namespace {

OrbitSample run_orbit(const Model& m, Rational start, std::size_t steps) {
    OrbitSample s;
    s.start = start;
    std::map<Rational, std::size_t> seen;
    Rational cur = std::move(start);
    for (std::size_t step = 0; step <= steps; ++step) {
        if (m.exceptional().contains(cur)) {
            // landing in S is death even when the budget ends here
            s.trajectory.push_back(cur);
            s.surviving = false;
            s.bullet_step = step + 1;
            return s;
        }
        auto [it, fresh] = seen.emplace(cur, step);
        if (!fresh) {
            s.surviving = true;
            s.cycled = true;
            s.cycle_start = it->second;
            s.tail.assign(s.trajectory.begin() + static_cast<std::ptrdiff_t>(it->second),
                          s.trajectory.end());
            return s;
        }
        s.trajectory.push_back(cur);
        if (step == steps) break;
        cur = m.eval(OrbitPoint(cur)).value();
    }
    s.surviving = true;
    s.tail.assign(s.trajectory.begin() + static_cast<std::ptrdiff_t>(s.trajectory.size() / 2),
                  s.trajectory.end());
    return s;
}

} // namespace

std::vector<OrbitSample> sweep(const Model& m, std::size_t grid_n, std::size_t steps) {
    if (grid_n < 2) throw ConfigError("grid needs at least 2 subdivisions");
    std::vector<OrbitSample> out;
    const Rational lo = m.domain_lo();
    const Rational len = m.domain_length();
    for (std::size_t j = 0; j <= grid_n; ++j) {
        Rational x = lo + len * Rational(j, grid_n);
        if (m.exceptional().contains(x)) continue;
        out.push_back(run_orbit(m, std::move(x), steps));
    }
    return out;
}

OracleVerdict validate(const Model& m, const Decomposition& d,
                       const std::vector<OrbitSample>& samples) {
    OracleVerdict v;
    for (const auto& s : samples) {
        if (!s.surviving) continue;
        ++v.surviving;

        std::size_t best_hits = 0;
        bool in_one = false;
        for (const auto& comp : d.components) {
            std::size_t hits = 0;
            for (const auto& p : s.tail) {
                if (comp.region.contains(p)) ++hits;
            }
            best_hits = std::max(best_hits, hits);
            if (hits == s.tail.size() && !s.tail.empty()) in_one = true;
        }
        if (best_hits == 0) continue; // not assignable to any component
        ++v.assigned;
        if (in_one) {
            ++v.agreeing;
        } else {
            v.disagreeing_starts.push_back(s.start);
        }

        // confinement: the whole trajectory must stay inside the closure
        // of the component the orbit starts in
        for (std::size_t c = 0; c < d.components.size(); ++c) {
            if (!d.components[c].region.contains(s.start)) continue;
            ClosedIntervalSet cl = closure(d.components[c].region);
            for (const auto& p : s.trajectory) {
                if (!cl.contains(p)) {
                    v.violations.push_back({s.start, p, c});
                    break;
                }
            }
            break;
        }
    }
    v.agreement = v.assigned == 0 ? 1.0
                                  : static_cast<double>(v.agreeing) / static_cast<double>(v.assigned);

    // SplitPossible: an interior exceptional point of a component that no
    // sampled tail crosses suggests the region might split there
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        for (const auto& sp : m.exceptional().points()) {
            if (!d.components[c].region.contains(sp)) continue;
            bool crossed = false;
            for (const auto& s : samples) {
                if (!s.surviving) continue;
                bool below = false, above = false;
                for (const auto& p : s.tail) {
                    if (!d.components[c].region.contains(p)) continue;
                    (p < sp ? below : above) = true;
                }
                if (below && above) {
                    crossed = true;
                    break;
                }
            }
            if (!crossed) v.split_possible.push_back({c, sp});
        }
    }
    return v;
}

GapStats gap_statistics(const FinitePointSet& cloud, const ClosedInterval& domain) {
    GapStats g;
    std::vector<Rational> gaps;
    const auto& pts = cloud.points();
    if (pts.empty()) {
        gaps.push_back(domain.hi - domain.lo);
    } else {
        gaps.push_back(pts.front() - domain.lo);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(pts[i + 1] - pts[i]);
        gaps.push_back(domain.hi - pts.back());
    }
    std::map<Rational, std::size_t> hist;
    g.max_gap = 0;
    for (const auto& gap : gaps) {
        g.max_gap = std::max(g.max_gap, gap);
        ++hist[gap];
    }
    for (auto it = hist.rbegin(); it != hist.rend(); ++it) g.histogram.push_back(*it);
    return g;
}

} // namespace pmdecomp
