#include "pmdecomp/cellgraph.hpp"
#include "pmdecomp/errors.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pmdecomp;

namespace {

Model tent() {
    return Model::create({rat(0), rat(1, 2), rat(1)}, {{rat(2), rat(0)}, {rat(-2), rat(2)}});
}

Model two_component() {
    return Model::create({rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)},
                         {{rat(2), rat(0)},
                          {rat(-2), rat(1)},
                          {rat(2), rat(-1, 2)},
                          {rat(-2), rat(5, 2)}});
}

Model contraction() {
    return Model::create({rat(0), rat(1)}, {{rat(1, 2), rat(1, 4)}});
}

Model h_prime() {
    return Model::create({rat(0), rat(1, 2), rat(1), rat(3, 2), rat(2), rat(5, 2), rat(3)},
                         {{rat(2), rat(0)},
                          {rat(-2), rat(3)},
                          {rat(2), rat(-1)},
                          {rat(-2), rat(6)},
                          {rat(2), rat(-2)},
                          {rat(-2), rat(6)}});
}

OpenIntervalSet ois(std::vector<std::pair<Rational, Rational>> ivs) {
    std::vector<Interval> raw;
    for (auto& [a, b] : ivs) raw.push_back({a, b});
    return normalize(std::move(raw));
}

DecompositionOptions opts(const Rational& delta, std::size_t depth = 10) {
    DecompositionOptions o;
    o.delta = delta;
    o.depth = depth;
    o.saturation.max_depth = depth;
    return o;
}

// structure-only runs: skip the orbit sampling inside the verdicts
DecompositionOptions structural(const Rational& delta, std::size_t depth = 10) {
    DecompositionOptions o = opts(delta, depth);
    o.transit.samples = 0;
    return o;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const TransitionGraph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < g.cell_count(); ++i) {
        for (std::size_t j = g.succ[i].first; j <= g.succ[i].second; ++j) out.insert({i, j});
    }
    return out;
}

} // namespace

TEST_CASE("partition refines S gaps to delta") {
    Model t = tent();
    CellPartition quarter = build_partition(t, rat(1, 4), 1000);
    CHECK(quarter.cuts == FinitePointSet::of({rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)}));
    CHECK(quarter.cell_count() == 4);

    // coarse resolution leaves exactly the S gaps
    CellPartition coarse = build_partition(t, rat(2), 1000);
    CHECK(coarse.cuts == t.exceptional());

    CHECK(quarter.cell_index(rat(1, 8)) == 0);
    CHECK_FALSE(quarter.cell_index(rat(1, 4)).has_value());
    CHECK_THROWS_AS(build_partition(t, rat(1, 1024), 100), ComplexityExceededError);
    CHECK_THROWS_AS(build_partition(t, rat(0), 100), ConfigError);
}

TEST_CASE("tent graph at delta 1/4 has the hand-derived edges") {
    Model t = tent();
    TransitionGraph g = build_graph(t, rat(1, 4), 1000);
    REQUIRE(g.cell_count() == 4);
    // cells: 0 (0,1/4)  1 (1/4,1/2)  2 (1/2,3/4)  3 (3/4,1)
    std::set<std::pair<std::size_t, std::size_t>> expect{
        {0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 0}, {3, 1}};
    CHECK(edge_set(g) == expect);
    CHECK(g.component_count == 1);
}

TEST_CASE("identity lap yields pure self-loops") {
    Model ident = Model::create({rat(0), rat(1)}, {{rat(1), rat(0)}});
    TransitionGraph g = build_graph(ident, rat(1, 2), 1000);
    REQUIRE(g.cell_count() == 2);
    std::set<std::pair<std::size_t, std::size_t>> expect{{0, 0}, {1, 1}};
    CHECK(edge_set(g) == expect);
    CHECK(g.component_count == 2);
}

TEST_CASE("grand orbit cells and regions") {
    Model t = tent();
    TransitionGraph g = build_graph(t, rat(1, 4), 1000);
    std::vector<std::size_t> all = grand_orbit_cells(g, {0});
    CHECK(all == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(region_of_cells(g, all) == ois({{rat(0), rat(1)}}));
    CHECK(grand_orbit_cells(g, {}).empty());

    Model m = two_component();
    TransitionGraph g2 = build_graph(m, rat(1, 8), 1000);
    std::vector<std::size_t> left = grand_orbit_cells(g2, {0});
    CHECK(region_of_cells(g2, left) == ois({{rat(0), rat(1, 2)}}));
}

TEST_CASE("minimal components: tent") {
    Decomposition d = minimal_components(tent(), opts(rat(1, 4)));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].region == ois({{rat(0), rat(1)}}));
    CHECK(d.components[0].witnesses == FinitePointSet::of({rat(0), rat(1, 2), rat(1)}));
    CHECK(d.sigma == ois({{rat(0), rat(1)}}));
    CHECK(d.zed.empty());
}

TEST_CASE("minimal components: two halves stay apart") {
    Decomposition d = minimal_components(two_component(), opts(rat(1, 16)));
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].region == ois({{rat(0), rat(1, 2)}}));
    CHECK(d.components[1].region == ois({{rat(1, 2), rat(1)}}));
    // 1/2 abuts both halves, so it witnesses neither
    CHECK_FALSE(d.components[0].witnesses.contains(rat(1, 2)));
    CHECK_FALSE(d.components[1].witnesses.contains(rat(1, 2)));
    CHECK(d.components[0].witnesses.contains(rat(1, 4)));
    CHECK(d.components[1].witnesses.contains(rat(3, 4)));
    CHECK(d.zed.empty());
    // count bounded by the exceptional set
    CHECK(d.components.size() <= d.evidence.witness_hulls.size());
}

TEST_CASE("minimal components: contraction has no evidence") {
    Decomposition d = minimal_components(contraction(), opts(rat(1, 64), 12));
    CHECK(d.components.empty());
    CHECK(d.sigma.empty());
    CHECK(d.zed == ois({{rat(0), rat(1)}}));
    REQUIRE(d.notes.size() == 1);
}

TEST_CASE("minimal components: the graph encoding runs as one component") {
    Decomposition d = minimal_components(h_prime(), opts(rat(1, 8)));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].region == ois({{rat(0), rat(3)}}));
    CHECK(d.components[0].witnesses.contains(rat(1, 2)));
    CHECK(d.components[0].witnesses.contains(rat(3, 2)));
    CHECK(d.components[0].witnesses.contains(rat(5, 2)));
}

TEST_CASE("component regions are diamond-fixed, disjoint, forward-trapped") {
    Model maps[] = {tent(), two_component(), h_prime()};
    for (const Model& m : maps) {
        Decomposition d = minimal_components(m, structural(m.domain_length() / 64));
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            const OpenIntervalSet& r = d.components[i].region;
            CHECK(is_regular_open(r));
            ClosedIntervalSet cl = closure(r);
            CHECK(subset_of_closed(m.image_mod(r), cl));
            CHECK(subset_of_closed(m.preimage(r), cl));
            for (std::size_t j = i + 1; j < d.components.size(); ++j) {
                CHECK_FALSE(meets(r, d.components[j].region));
            }
        }
    }
}

TEST_CASE("witness reseeding reproduces each component region") {
    Model maps[] = {tent(), two_component(), h_prime()};
    for (const Model& m : maps) {
        Rational delta = m.domain_length() / 64;
        Decomposition d = minimal_components(m, structural(delta));
        TransitionGraph g = build_graph(m, delta, 100000);
        for (const auto& comp : d.components) {
            // witnesses within the closure of the region, as a point set
            std::vector<Rational> trace;
            ClosedIntervalSet cl = closure(comp.region);
            for (const auto& s : m.exceptional().points()) {
                if (cl.contains(s)) trace.push_back(s);
            }
            OpenIntervalSet rebuilt = region_from_witnesses(g, FinitePointSet::of(trace));
            CHECK(rebuilt == comp.region);
            CHECK(to_string(rebuilt) == to_string(comp.region)); // canonical text too
        }
    }
}

TEST_CASE("witness grouping is stable under refinement") {
    Model maps[] = {tent(), two_component(), h_prime()};
    for (const Model& m : maps) {
        Rational delta = m.domain_length() / 64;
        Decomposition coarse = minimal_components(m, structural(delta));
        Decomposition fine = minimal_components(m, structural(delta / 2));
        Decomposition finer = minimal_components(m, structural(delta / 4));
        REQUIRE(coarse.components.size() == fine.components.size());
        REQUIRE(fine.components.size() == finer.components.size());
        for (std::size_t i = 0; i < coarse.components.size(); ++i) {
            CHECK(coarse.components[i].witnesses == fine.components[i].witnesses);
            CHECK(fine.components[i].witnesses == finer.components[i].witnesses);
        }
    }
}

TEST_CASE("transitivity verdicts") {
    SUBCASE("tent is supported at 1/64 cover") {
        Model t = tent();
        TransitionGraph g = build_graph(t, rat(1, 64), 100000);
        TransitivityOptions to;
        to.eps_cover = rat(1, 64);
        TransitivityReport rep = transitivity(t, g, ois({{rat(0), rat(1)}}), to);
        CHECK(rep.scc_count == 1);
        CHECK(rep.verdict == Transitivity::Supported);
    }

    SUBCASE("a deliberately merged region over two halves is refuted") {
        Model m = two_component();
        TransitionGraph g = build_graph(m, rat(1, 16), 100000);
        TransitivityReport rep = transitivity(m, g, ois({{rat(0), rat(1)}}), TransitivityOptions{});
        CHECK(rep.verdict == Transitivity::RefutedAtResolution);
        CHECK(rep.scc_count >= 2);
        CHECK(rep.refutation_witness == ois({{rat(0), rat(1, 2)}}));
    }

    SUBCASE("a single self-looping cell is trivially supported") {
        Model ident = Model::create({rat(0), rat(1)}, {{rat(1), rat(0)}});
        TransitionGraph g = build_graph(ident, rat(1), 1000);
        TransitivityOptions to;
        to.eps_cover = rat(1); // one bin: the loop covers it immediately
        TransitivityReport rep = transitivity(ident, g, ois({{rat(0), rat(1)}}), to);
        CHECK(rep.verdict == Transitivity::Supported);
    }
}

TEST_CASE("germ verdicts on the reference maps") {
    SaturationOptions sat;
    sat.max_depth = 24;

    SUBCASE("tent: every interior point sits in the full component") {
        GermReport rep = germ(tent(), rat(2, 5), rat(1, 16), 4, rat(1, 64), sat);
        CHECK(rep.verdict == GermVerdict::NonDegenerate);
        CHECK(rep.region == ois({{rat(0), rat(1)}}));
    }

    SUBCASE("two component: the germ fills the containing half") {
        GermReport rep = germ(two_component(), rat(3, 4), rat(1, 16), 4, rat(1, 64), sat);
        CHECK(rep.verdict == GermVerdict::NonDegenerate);
        CHECK(rep.region == ois({{rat(1, 2), rat(1)}}));
    }

    SUBCASE("contraction: hulls thin out") {
        GermReport rep = germ(contraction(), rat(1, 8), rat(1, 16), 6, rat(1, 64), sat);
        CHECK(rep.verdict == GermVerdict::ShrinksToNowhereDense);
        // hull measure decays with the radius
        CHECK(rep.levels.back().region.measure() < rat(1, 8));
    }

    SUBCASE("germ agrees with the computed decomposition") {
        Model m = two_component();
        Decomposition d = minimal_components(m, opts(rat(1, 64)));
        REQUIRE(d.components.size() == 2);
        GermReport left = germ(m, rat(1, 5), rat(1, 16), 4, rat(1, 64), sat);
        CHECK(left.verdict == GermVerdict::NonDegenerate);
        CHECK(left.region == d.components[0].region);
    }
}

TEST_CASE("component count bounded by the exceptional set on random models") {
    std::mt19937_64 rng(777);
    auto coord = [&](long long den) {
        return Rational(static_cast<long long>(rng() % (den + 1)), den);
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> cuts{rat(0), rat(1)};
        std::size_t laps = 1 + rng() % 6;
        while (cuts.size() < laps + 1) {
            Rational c = coord(32);
            bool fresh = true;
            for (const auto& x : cuts) fresh = fresh && x != c;
            if (fresh) cuts.push_back(c);
        }
        std::sort(cuts.begin(), cuts.end());
        std::vector<Piece> pieces;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            Rational u = coord(16), v = coord(16);
            if (u == v) v = u < 1 ? u + rat(1, 16) : u - rat(1, 16);
            Rational slope = (v - u) / (cuts[k + 1] - cuts[k]);
            pieces.push_back({slope, u - slope * cuts[k]});
        }
        Model m = Model::create(cuts, pieces);

        DecompositionOptions o = opts(rat(1, 64), 4);
        o.saturation.complexity_cap = 20000;
        Decomposition d = minimal_components(m, o);
        CHECK(d.components.size() <= m.exceptional().size());
        if (!d.sigma.empty()) {
            CHECK(d.components.size() >= 1);
        }
    }
}
