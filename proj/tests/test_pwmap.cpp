#include "pmdecomp/errors.hpp"
#include "pmdecomp/pwmap.hpp"
#include "pmdecomp/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace pmdecomp;

namespace {

Model tent() {
    return Model::create({rat(0), rat(1, 2), rat(1)}, {{rat(2), rat(0)}, {rat(-2), rat(2)}});
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

// Random valid model: target intervals are chosen inside the domain, so
// every piece image closure stays inside by construction.
Model random_model(std::mt19937_64& rng, std::size_t max_laps = 7) {
    auto coord = [&](long long den) {
        return Rational(static_cast<long long>(rng() % (den + 1)), den);
    };
    std::vector<Rational> cuts{rat(0), rat(1)};
    std::size_t laps = 1 + rng() % max_laps;
    while (cuts.size() < laps + 1) {
        Rational c = coord(64);
        bool fresh = true;
        for (const auto& x : cuts) fresh = fresh && x != c;
        if (fresh) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());

    std::vector<Piece> pieces;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Rational u = coord(32), v = coord(32);
        if (u == v) v = u < 1 ? u + rat(1, 32) : u - rat(1, 32);
        Rational slope = (v - u) / (cuts[k + 1] - cuts[k]);
        pieces.push_back({slope, u - slope * cuts[k]});
    }
    std::vector<Rational> extra;
    if (rng() % 3 == 0) extra.push_back(coord(128));
    return Model::create(std::move(cuts), std::move(pieces), std::move(extra));
}

OpenIntervalSet random_open(std::mt19937_64& rng, const Model& m) {
    std::vector<Interval> raw;
    std::size_t n = 1 + rng() % 3;
    Rational len = m.domain_length();
    for (std::size_t i = 0; i < n; ++i) {
        Rational a = m.domain_lo() + len * Rational(static_cast<long long>(rng() % 97), 97);
        Rational b = m.domain_lo() + len * Rational(static_cast<long long>(rng() % 97), 97);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        raw.push_back({a, b});
    }
    return normalize(std::move(raw));
}

} // namespace

TEST_CASE("model validation accepts the bundled maps") {
    Model t = tent();
    CHECK(t.pieces().size() == 2);
    CHECK(t.exceptional() == FinitePointSet::of({rat(0), rat(1, 2), rat(1)}));

    Model h = h_prime();
    CHECK(h.pieces().size() == 6);
    CHECK(h.domain_hi() == rat(3));
    CHECK(h.exceptional().size() == 7);
}

TEST_CASE("model validation rejects broken shapes") {
    CHECK_THROWS_AS(Model::create({rat(0), rat(1)}, {{rat(0), rat(1, 2)}}), NonMonotonePieceError);
    CHECK_THROWS_AS(Model::create({rat(0), rat(1)}, {{rat(3), rat(0)}}), EscapesDomainError);
    CHECK_THROWS_AS(Model::create_with_exceptional({rat(0), rat(1, 2), rat(1)},
                                                   {{rat(2), rat(0)}, {rat(-2), rat(2)}},
                                                   FinitePointSet::of({rat(0), rat(1)})),
                    SMissingBreakpointError);
    CHECK_THROWS_AS(Model::create({rat(0), rat(1)}, {{rat(1), rat(0)}}, {rat(2)}),
                    OutOfDomainError);
}

TEST_CASE("eval follows the lap and dies on S") {
    Model t = tent();
    CHECK(t.eval(OrbitPoint(rat(1, 4))) == OrbitPoint(rat(1, 2)));
    CHECK(t.eval(OrbitPoint(rat(1, 2))).is_bullet());
    CHECK(t.eval(OrbitPoint::bullet()).is_bullet());
    CHECK_THROWS_AS(t.eval(OrbitPoint(rat(2))), OutOfDomainError);
}

TEST_CASE("image_mod on the tent") {
    Model t = tent();
    CHECK(t.image_mod(ois({{rat(1, 4), rat(3, 4)}})) == ois({{rat(1, 2), rat(1)}}));
    CHECK(t.image_mod(ois({{rat(0), rat(1, 2)}})) == ois({{rat(0), rat(1)}}));
    CHECK(t.image_mod({}) == OpenIntervalSet{});
}

TEST_CASE("preimage on the tent") {
    Model t = tent();
    CHECK(t.preimage(ois({{rat(1, 2), rat(1)}})) ==
          ois({{rat(1, 4), rat(1, 2)}, {rat(1, 2), rat(3, 4)}}));
    CHECK(t.preimage(ois({{rat(0), rat(1)}})) ==
          ois({{rat(0), rat(1, 2)}, {rat(1, 2), rat(1)}}));
    CHECK(t.preimage({}) == OpenIntervalSet{});
}

TEST_CASE("preimage_points drops exceptional solutions") {
    Model t = tent();
    CHECK(t.preimage_points(rat(1, 2)) == FinitePointSet::of({rat(1, 4), rat(3, 4)}));
    CHECK(t.preimage_points(rat(0)).empty());

    // independent enumeration: solve both affine branches by hand and
    // drop anything in S
    Rational y = 1;
    std::vector<Rational> expect;
    const std::vector<Rational> candidates{Rational(y / 2), Rational(1 - y / 2)};
    for (const Rational& cand : candidates) {
        bool in_open_lap = (cand > 0 && cand < rat(1, 2)) || (cand > rat(1, 2) && cand < 1);
        if (in_open_lap && cand != rat(1, 2)) expect.push_back(cand);
    }
    CHECK(t.preimage_points(y) == FinitePointSet::of(expect));
    CHECK(t.preimage_points(rat(1)).empty());
}

TEST_CASE("forward orbits") {
    Model t = tent();
    std::vector<OrbitPoint> o = t.forward_orbit(rat(1, 4), 3);
    CHECK(o == std::vector<OrbitPoint>{OrbitPoint(rat(1, 4)), OrbitPoint(rat(1, 2)),
                                       OrbitPoint::bullet(), OrbitPoint::bullet()});

    std::vector<OrbitPoint> cyc = t.forward_orbit(rat(2, 5), 4);
    CHECK(cyc == std::vector<OrbitPoint>{OrbitPoint(rat(2, 5)), OrbitPoint(rat(4, 5)),
                                         OrbitPoint(rat(2, 5)), OrbitPoint(rat(4, 5)),
                                         OrbitPoint(rat(2, 5))});

    // the interval encoding of the three-edge graph map, evaluated from
    // its displayed branches
    Model h = h_prime();
    std::vector<OrbitPoint> ho = h.forward_orbit(rat(1, 5), 2);
    CHECK(ho == std::vector<OrbitPoint>{OrbitPoint(rat(1, 5)), OrbitPoint(rat(2, 5)),
                                        OrbitPoint(rat(4, 5))});
}

TEST_CASE("openness and exactness of image and preimage on random models") {
    std::mt19937_64 rng(94);
    for (int trial = 0; trial < 60; ++trial) {
        Model m = random_model(rng);
        OpenIntervalSet o = random_open(rng, m);

        OpenIntervalSet pre = m.preimage(o);
        for (const auto& s : m.exceptional().points()) {
            CHECK_FALSE(pre.contains(s)); // preimage misses S
        }
        OpenIntervalSet img = m.image_mod(o);
        CHECK(normalize(img.intervals()) == img); // canonical open output
        CHECK(normalize(pre.intervals()) == pre);

        // sample exactness both ways
        for (const auto& iv : pre.intervals()) {
            Rational x = iv.lo + (iv.hi - iv.lo) / 3;
            OrbitPoint y = m.eval(OrbitPoint(x));
            REQUIRE_FALSE(y.is_bullet());
            CHECK(o.contains(y.value()));
        }
        OpenIntervalSet inside = split_at(o, m.exceptional());
        for (const auto& iv : inside.intervals()) {
            Rational x = iv.lo + (iv.hi - iv.lo) / 2;
            if (m.exceptional().contains(x)) continue;
            OrbitPoint y = m.eval(OrbitPoint(x));
            REQUIRE_FALSE(y.is_bullet());
            CHECK(img.contains(y.value()));
        }

        // finite fibers: at most one preimage per lap
        Rational mid = m.domain_lo() + m.domain_length() / 2;
        CHECK(m.preimage_points(mid).size() <= m.pieces().size());
    }
}

TEST_CASE("piecewise monotonicity separates points within a lap") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Model m = random_model(rng);
        const auto& d = m.breakpoints().points();
        for (std::size_t k = 0; k + 1 < d.size(); ++k) {
            Rational len = d[k + 1] - d[k];
            Rational x = d[k] + len / 4;
            Rational y = d[k] + len / 2;
            if (m.exceptional().contains(x) || m.exceptional().contains(y)) continue;
            OrbitPoint fx = m.eval(OrbitPoint(x));
            OrbitPoint fy = m.eval(OrbitPoint(y));
            CHECK(fx.value() != fy.value());
            bool increasing = m.pieces()[k].slope > 0;
            CHECK((fx.value() < fy.value()) == increasing);
        }
    }
}

TEST_CASE("json model round-trip") {
    Model h = h_prime();
    Json j = model_to_json(h);
    Model back = model_from_json(j);
    CHECK(back.breakpoints() == h.breakpoints());
    CHECK(back.pieces() == h.pieces());
    CHECK(back.exceptional() == h.exceptional());

    Json bad = j;
    bad["pieces"][0]["slope"] = "0";
    CHECK_THROWS_AS(model_from_json(bad), NonMonotonePieceError);
}
