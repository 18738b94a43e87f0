#include "pmdecomp/cellgraph.hpp"

#include "pmdecomp/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace pmdecomp {

std::string to_string(Transitivity t) {
    switch (t) {
        case Transitivity::Supported: return "supported";
        case Transitivity::RefutedAtResolution: return "refuted_at_resolution";
        case Transitivity::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(GermVerdict v) {
    switch (v) {
        case GermVerdict::NonDegenerate: return "non_degenerate";
        case GermVerdict::ShrinksToNowhereDense: return "shrinks_to_nowhere_dense";
        case GermVerdict::Unknown: return "unknown";
    }
    return "?";
}

std::optional<std::size_t> CellPartition::cell_index(const Rational& x) const {
    const auto& c = cuts.points();
    if (x <= c.front() || x >= c.back()) return std::nullopt;
    auto it = std::upper_bound(c.begin(), c.end(), x);
    std::size_t k = static_cast<std::size_t>(it - c.begin()) - 1;
    if (c[k] == x) return std::nullopt;
    return k;
}

CellPartition build_partition(const Model& m, const Rational& delta, std::size_t cell_cap) {
    if (delta <= 0) throw ConfigError("delta must be positive");
    const auto& s = m.exceptional().points();
    std::vector<Rational> cuts;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        cuts.push_back(s[i]);
        Rational len = s[i + 1] - s[i];
        if (len > delta) {
            BigInt n = rational_ceil(len / delta);
            for (BigInt j = 1; j < n; ++j) {
                cuts.push_back(s[i] + len * Rational(j, n));
            }
        }
    }
    cuts.push_back(s.back());
    CellPartition part{FinitePointSet::of(std::move(cuts)), delta};
    if (part.cell_count() > cell_cap) {
        throw ComplexityExceededError("partition needs " + std::to_string(part.cell_count()) +
                                      " cells, cap is " + std::to_string(cell_cap));
    }
    return part;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

TransitionGraph build_graph(const Model& m, const Rational& delta, std::size_t cell_cap) {
    TransitionGraph g;
    g.partition = build_partition(m, delta, cell_cap);
    const auto& cuts = g.partition.cuts.points();
    const std::size_t n = g.partition.cell_count();

    UnionFind uf(n);
    g.succ.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Interval cell = g.partition.cell(i);
        Rational mid = cell.lo + (cell.hi - cell.lo) / 2;
        const Piece& p = m.pieces()[*m.piece_index(mid)];
        Rational v0 = p.slope * cell.lo + p.intercept;
        Rational v1 = p.slope * cell.hi + p.intercept;
        if (v0 > v1) std::swap(v0, v1);
        // first cell whose upper cut exceeds v0, last whose lower cut is
        // below v1: exactly the positive-overlap range
        std::size_t lo = static_cast<std::size_t>(
            std::upper_bound(cuts.begin(), cuts.end(), v0) - cuts.begin() - 1);
        std::size_t hi = static_cast<std::size_t>(
            std::lower_bound(cuts.begin(), cuts.end(), v1) - cuts.begin() - 1);
        lo = std::min(lo, n - 1);
        hi = std::min(hi, n - 1);
        g.succ.push_back({lo, hi});
        for (std::size_t j = lo; j <= hi; ++j) uf.unite(i, j);
    }

    g.component_id.resize(n);
    std::map<std::size_t, std::size_t> root_to_id;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = uf.find(i);
        auto [it, fresh] = root_to_id.emplace(r, root_to_id.size());
        g.component_id[i] = it->second;
        (void)fresh;
    }
    g.component_count = root_to_id.size();
    return g;
}

std::vector<std::size_t> grand_orbit_cells(const TransitionGraph& g,
                                           const std::vector<std::size_t>& seeds) {
    std::vector<bool> wanted(g.component_count, false);
    for (std::size_t s : seeds) wanted[g.component_id[s]] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.cell_count(); ++i) {
        if (wanted[g.component_id[i]]) out.push_back(i);
    }
    return out;
}

OpenIntervalSet region_of_cells(const TransitionGraph& g, const std::vector<std::size_t>& cells) {
    std::vector<Interval> raw;
    raw.reserve(cells.size());
    for (std::size_t i : cells) raw.push_back(g.partition.cell(i));
    return diamond(normalize(std::move(raw)));
}

std::vector<std::size_t> cells_of_region(const TransitionGraph& g, const OpenIntervalSet& region) {
    const auto& cuts = g.partition.cuts.points();
    std::vector<std::size_t> out;
    for (const auto& iv : region.intervals()) {
        auto it = std::lower_bound(cuts.begin(), cuts.end(), iv.lo);
        std::size_t j = static_cast<std::size_t>(it - cuts.begin());
        while (j + 1 < cuts.size() && cuts[j + 1] <= iv.hi) {
            out.push_back(j);
            ++j;
        }
    }
    return out;
}

namespace {

// Iterative Tarjan over the cells of one region.
std::vector<std::size_t> scc_of_region(const TransitionGraph& g,
                                       const std::vector<std::size_t>& cells,
                                       std::size_t& scc_count) {
    std::vector<std::ptrdiff_t> local(g.cell_count(), -1);
    for (std::size_t k = 0; k < cells.size(); ++k) local[cells[k]] = static_cast<std::ptrdiff_t>(k);

    const std::size_t n = cells.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kNone), low(n, 0), comp(n, kNone), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t next_index = 0;
    scc_count = 0;

    struct Frame {
        std::size_t v;
        std::size_t next_child;
    };

    for (std::size_t start = 0; start < n; ++start) {
        if (index[start] != kNone) continue;
        std::vector<Frame> call;
        call.push_back({start, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            std::size_t v = f.v;
            if (f.next_child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            auto [alo, ahi] = g.succ[cells[v]];
            bool descended = false;
            while (f.next_child <= ahi - alo) {
                std::size_t cell = alo + f.next_child;
                ++f.next_child;
                std::ptrdiff_t w = local[cell];
                if (w < 0) continue; // edge leaves the region
                std::size_t wi = static_cast<std::size_t>(w);
                if (index[wi] == kNone) {
                    call.push_back({wi, 0});
                    descended = true;
                    break;
                }
                if (on_stack[wi]) low[v] = std::min(low[v], index[wi]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = scc_count;
                    if (w == v) break;
                }
                ++scc_count;
            }
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

// Deterministic rational in (0, 1) with an odd denominator, so that orbits
// under dyadic slopes keep a stable denominator.
Rational random_unit_fraction(std::mt19937_64& rng) {
    static const long long primes[] = {1000003, 1048573, 16769023, 33554467, 67108879};
    long long q = primes[rng() % 5];
    long long num = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(q - 1));
    return Rational(num, q);
}

} // namespace

TransitivityReport transitivity(const Model& m, const TransitionGraph& g,
                                const OpenIntervalSet& region, const TransitivityOptions& opt) {
    TransitivityReport rep;
    std::vector<std::size_t> cells = cells_of_region(g, region);
    if (cells.empty()) return rep;

    std::size_t scc_count = 0;
    std::vector<std::size_t> comp = scc_of_region(g, cells, scc_count);
    rep.scc_count = scc_count;

    if (scc_count > 1) {
        // a sink SCC is forward-closed inside the region: a proper
        // invariant subregion, hence a refutation witness at this scale
        std::vector<bool> is_sink(scc_count, true);
        std::vector<std::ptrdiff_t> local(g.cell_count(), -1);
        for (std::size_t k = 0; k < cells.size(); ++k) {
            local[cells[k]] = static_cast<std::ptrdiff_t>(k);
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
            auto [alo, ahi] = g.succ[cells[k]];
            for (std::size_t cell = alo; cell <= ahi; ++cell) {
                std::ptrdiff_t w = local[cell];
                if (w >= 0 && comp[static_cast<std::size_t>(w)] != comp[k]) {
                    is_sink[comp[k]] = false;
                }
            }
        }
        for (std::size_t k = 0; k < cells.size(); ++k) { // leftmost sink wins
            if (is_sink[comp[k]]) {
                std::vector<std::size_t> wit;
                for (std::size_t j = 0; j < cells.size(); ++j) {
                    if (comp[j] == comp[k]) wit.push_back(cells[j]);
                }
                rep.refutation_witness = region_of_cells(g, wit);
                rep.verdict = Transitivity::RefutedAtResolution;
                return rep;
            }
        }
        rep.verdict = Transitivity::Unknown;
        return rep;
    }

    // single SCC: look for one orbit visiting every eps_cover bin
    Rational eps = opt.eps_cover > 0 ? opt.eps_cover : Rational(4) * g.partition.delta;
    struct BinRange {
        Rational lo, len;
        BigInt bins;
        std::size_t offset;
    };
    std::vector<BinRange> bins;
    std::size_t total = 0;
    for (const auto& iv : region.intervals()) {
        Rational len = iv.hi - iv.lo;
        BigInt nb = rational_ceil(len / eps);
        if (nb < 1) nb = 1;
        bins.push_back({iv.lo, len, nb, total});
        total += static_cast<std::size_t>(nb);
    }
    rep.bins_total = total;

    std::mt19937_64 rng(opt.rng_seed);
    for (std::size_t s = 0; s < opt.samples; ++s) {
        std::size_t ci = cells[(s * 7919) % cells.size()];
        Interval cell = g.partition.cell(ci);
        Rational x = cell.lo + (cell.hi - cell.lo) * random_unit_fraction(rng);

        std::vector<bool> seen(total, false);
        std::size_t covered = 0;
        OrbitPoint cur(x);
        for (std::size_t step = 0; step <= opt.steps && !cur.is_bullet(); ++step) {
            const Rational& v = cur.value();
            for (const auto& b : bins) {
                if (v <= b.lo || v >= b.lo + b.len) continue;
                Rational t = (v - b.lo) * Rational(b.bins) / b.len;
                std::size_t bin = b.offset + static_cast<std::size_t>(numerator(t) / denominator(t));
                if (bin < total && !seen[bin]) {
                    seen[bin] = true;
                    ++covered;
                }
                break;
            }
            if (covered == total) break;
            cur = m.eval(cur);
        }
        rep.bins_covered_best = std::max(rep.bins_covered_best, covered);
        if (covered == total) {
            rep.verdict = Transitivity::Supported;
            return rep;
        }
    }
    rep.verdict = Transitivity::Unknown;
    return rep;
}

Decomposition minimal_components(const Model& m, const DecompositionOptions& opt) {
    Decomposition out;
    out.delta = opt.delta;
    out.depth = opt.depth;

    TransitionGraph g = build_graph(m, opt.delta, opt.cell_cap);
    out.evidence = sigma_and_zed(m, opt.depth, opt.delta, opt.saturation);

    const auto& cuts = g.partition.cuts.points();
    // witness -> undirected component, when both abutting cells agree
    std::map<std::size_t, std::vector<Rational>> groups;
    for (const auto& c : m.exceptional().points()) {
        std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cuts.begin(), cuts.end(), c) - cuts.begin());
        std::optional<std::size_t> left, right;
        if (idx >= 1) left = g.component_id[idx - 1];
        if (idx < g.cell_count()) right = g.component_id[idx];
        std::optional<std::size_t> agreed;
        if (left && right) {
            if (*left == *right) agreed = left;
        } else {
            agreed = left ? left : right;
        }
        if (agreed) groups[*agreed].push_back(c);
    }

    std::vector<Interval> region_union;
    for (const auto& [comp_id, witnesses] : groups) {
        std::vector<std::size_t> cells;
        for (std::size_t i = 0; i < g.cell_count(); ++i) {
            if (g.component_id[i] == comp_id) cells.push_back(i);
        }
        Component comp;
        comp.region = region_of_cells(g, cells);
        comp.witnesses = FinitePointSet::of(witnesses);

        bool evidenced = false;
        for (const auto& wh : out.evidence.witness_hulls) {
            if (comp.witnesses.contains(wh.witness) && meets(wh.hull, comp.region)) {
                evidenced = true;
                break;
            }
        }
        if (!evidenced) continue;

        comp.transitivity = transitivity(m, g, comp.region, opt.transit);
        out.components.push_back(std::move(comp));
    }

    std::sort(out.components.begin(), out.components.end(),
              [](const Component& a, const Component& b) {
                  return a.region.intervals().front().lo < b.region.intervals().front().lo;
              });

    for (const auto& comp : out.components) {
        for (const auto& iv : comp.region.intervals()) region_union.push_back(iv);
    }
    OpenIntervalSet united = normalize(std::move(region_union));
    out.sigma = diamond(united);
    out.zed = complement_in(united, m.domain_closed());
    if (out.components.empty()) {
        out.notes.push_back("no evidence of minimal components at this depth and resolution");
    }
    return out;
}

OpenIntervalSet region_from_witnesses(const TransitionGraph& g, const FinitePointSet& witnesses) {
    const auto& cuts = g.partition.cuts.points();
    std::vector<Interval> raw;
    for (const auto& c : witnesses.points()) {
        std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cuts.begin(), cuts.end(), c) - cuts.begin());
        if (idx >= cuts.size() || cuts[idx] != c) continue; // not a cut: nothing abuts it
        std::optional<std::size_t> left, right;
        if (idx >= 1) left = g.component_id[idx - 1];
        if (idx < g.cell_count()) right = g.component_id[idx];
        std::optional<std::size_t> agreed;
        if (left && right) {
            if (*left == *right) agreed = left;
        } else {
            agreed = left ? left : right;
        }
        if (!agreed) continue;
        for (std::size_t i = 0; i < g.cell_count(); ++i) {
            if (g.component_id[i] == *agreed) raw.push_back(g.partition.cell(i));
        }
    }
    return diamond(normalize(std::move(raw)));
}

GermReport germ(const Model& m, const Rational& x, const Rational& r0, std::size_t levels,
                const Rational& delta, const SaturationOptions& sat) {
    if (!m.in_domain(x)) throw OutOfDomainError("germ center outside the domain");
    GermReport rep;
    rep.center = x;
    rep.r0 = r0;

    CellPartition part = build_partition(m, delta, sat.complexity_cap);

    ClosedIntervalSet cumulative;
    Rational r = r0;
    for (std::size_t n = 0; n < levels; ++n, r /= 2) {
        OpenIntervalSet ball = intersect(normalize({{x - r, x + r}}), m.domain_open());
        BoundedResult hull = inv(m, ball, sat);
        ClosedIntervalSet closed = closure(hull.set);
        cumulative = n == 0 ? closed : closed_intersect(cumulative, closed);
        rep.levels.push_back({r, std::move(closed), interior(cumulative)});
    }

    rep.region = rep.levels.back().region;
    const OpenIntervalSet& prev_region =
        rep.levels.size() >= 2 ? rep.levels[rep.levels.size() - 2].region : rep.region;
    const OpenIntervalSet& final_region = rep.region;
    bool has_fat_piece = false;
    for (const auto& iv : final_region.intervals()) {
        if (iv.hi - iv.lo >= delta) has_fat_piece = true;
    }
    auto contains_whole_cell = [&](const OpenIntervalSet& reg) {
        const auto& cuts = part.cuts.points();
        for (const auto& iv : reg.intervals()) {
            auto it = std::lower_bound(cuts.begin(), cuts.end(), iv.lo);
            std::size_t j = static_cast<std::size_t>(it - cuts.begin());
            if (j + 1 < cuts.size() && cuts[j + 1] <= iv.hi) return true;
        }
        return false;
    };

    if (final_region.empty() || !has_fat_piece) {
        rep.verdict = GermVerdict::ShrinksToNowhereDense;
    } else if (levels >= 2 && final_region == prev_region && contains_whole_cell(final_region)) {
        rep.verdict = GermVerdict::NonDegenerate;
    } else {
        rep.verdict = GermVerdict::Unknown;
    }
    return rep;
}

} // namespace pmdecomp
