#include "pmdecomp/cascade.hpp"

#include <algorithm>

namespace pmdecomp {

std::string to_string(CascadeRelation r) {
    switch (r) {
        case CascadeRelation::MutuallyCofinal: return "mutually_cofinal";
        case CascadeRelation::Disjoint: return "disjoint";
        case CascadeRelation::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// Cells reachable from one seed along forward edges, bounded by `depth`
// sweeps.
std::vector<std::size_t> forward_cells(const TransitionGraph& g, std::size_t seed,
                                       std::size_t depth) {
    std::vector<bool> seen(g.cell_count(), false);
    std::vector<std::size_t> frontier{seed};
    seen[seed] = true;
    for (std::size_t round = 0; round < depth && !frontier.empty(); ++round) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            auto [lo, hi] = g.succ[v];
            for (std::size_t w = lo; w <= hi; ++w) {
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.cell_count(); ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

} // namespace

Cascade build_cascade(const Model& m, const TransitionGraph& g, const OpenIntervalSet& component,
                      std::size_t basis_count, std::size_t depth) {
    (void)m;
    Cascade c;
    c.component = component;
    c.depth = depth;
    c.delta = g.partition.delta;

    std::vector<std::size_t> cells = cells_of_region(g, component);
    std::size_t n = std::min(basis_count, cells.size());
    c.basis.assign(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(n));

    OpenIntervalSet stage;
    for (std::size_t k = 0; k < c.basis.size(); ++k) {
        OpenIntervalSet v = region_of_cells(g, forward_cells(g, c.basis[k], depth));
        stage = k == 0 ? v : intersect(stage, v);
        stage = diamond(stage);
        c.stages.push_back(stage);
        if (stage.empty()) {
            c.empty_stage = k + 1;
            break;
        }
    }
    return c;
}

CoreReport core(const Cascade& c, std::size_t n) {
    CoreReport rep;
    rep.stages_used = std::min(n, c.stages.size());
    for (std::size_t k = 0; k < rep.stages_used; ++k) {
        ClosedIntervalSet cl = closure(c.stages[k]);
        rep.core = k == 0 ? cl : closed_intersect(rep.core, cl);
    }
    rep.core_diamond = interior(rep.core);
    if (!rep.core_diamond.empty()) {
        for (std::size_t k = 0; k < rep.stages_used; ++k) {
            if (c.stages[k] == rep.core_diamond) {
                rep.matching_stage = k + 1;
                break;
            }
        }
    }
    return rep;
}

DomainReport domain(const TransitionGraph& g, const Cascade& c) {
    DomainReport rep;
    if (c.stages.empty()) return rep;
    std::vector<std::size_t> seeds = cells_of_region(g, c.stages.front());
    rep.region = region_of_cells(g, grand_orbit_cells(g, seeds));
    rep.matches_component = rep.region == c.component;
    return rep;
}

CascadeRelation equivalent(const Cascade& a, const Cascade& b) {
    if (a.component != b.component) return CascadeRelation::Disjoint;
    if (a.stages.empty() || b.stages.empty()) return CascadeRelation::Unknown;
    auto cofinal_into = [](const Cascade& from, const Cascade& to) {
        // stages decrease, so the deepest stage of `from` is the best
        // candidate for every inclusion
        for (const auto& target : to.stages) {
            if (!subset(from.stages.back(), target)) return false;
        }
        return true;
    };
    if (cofinal_into(a, b) && cofinal_into(b, a)) return CascadeRelation::MutuallyCofinal;
    return CascadeRelation::Unknown;
}

std::vector<StageHit> typical_target_membership(const Model& m, const Rational& x,
                                                const Cascade& c, std::size_t horizon) {
    std::vector<OrbitPoint> orbit = m.forward_orbit(x, horizon);
    std::vector<StageHit> hits;
    hits.reserve(c.stages.size());
    for (std::size_t n = 0; n < c.stages.size(); ++n) {
        StageHit hit{n + 1, std::nullopt};
        for (std::size_t step = 0; step < orbit.size(); ++step) {
            if (orbit[step].is_bullet()) break;
            if (c.stages[n].contains(orbit[step].value())) {
                hit.first_hit = step;
                break;
            }
        }
        hits.push_back(hit);
    }
    return hits;
}

} // namespace pmdecomp
