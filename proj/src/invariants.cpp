#include "pmdecomp/invariants.hpp"

#include <set>
#include <utility>

namespace pmdecomp {

std::string to_string(SatStatus s) {
    switch (s) {
        case SatStatus::Stabilized: return "stabilized";
        case SatStatus::Truncated: return "truncated";
        case SatStatus::ComplexityExceeded: return "complexity_exceeded";
    }
    return "?";
}

std::string to_string(Direction d) {
    return d == Direction::UnderApproximation ? "under_approximation" : "over_approximation";
}

namespace {

// Generic bounded fixed-point loop over either carrier. Step must be
// monotone (result contains its argument).
template <typename SetT, typename Step>
std::pair<SetT, std::pair<SatStatus, std::size_t>>
saturate(SetT seed, const SaturationOptions& opt, std::size_t size_of_seed, Step step) {
    SetT cur = std::move(seed);
    if (size_of_seed > opt.complexity_cap) {
        return {std::move(cur), {SatStatus::ComplexityExceeded, 0}};
    }
    for (std::size_t round = 1; round <= opt.max_depth; ++round) {
        SetT next = step(cur);
        if (next == cur) {
            return {std::move(cur), {SatStatus::Stabilized, round - 1}};
        }
        cur = std::move(next);
        if (cur.size() > opt.complexity_cap) {
            return {std::move(cur), {SatStatus::ComplexityExceeded, round}};
        }
    }
    return {std::move(cur), {SatStatus::Truncated, opt.max_depth}};
}

FinitePointSet forward_points(const Model& m, const FinitePointSet& pts) {
    std::vector<Rational> out = pts.points();
    for (const auto& p : pts.points()) {
        OrbitPoint y = m.eval(OrbitPoint(p));
        if (!y.is_bullet()) out.push_back(y.value());
    }
    return FinitePointSet::of(std::move(out));
}

FinitePointSet backward_points(const Model& m, const FinitePointSet& pts) {
    std::vector<Rational> out = pts.points();
    for (const auto& p : pts.points()) {
        FinitePointSet pre = m.preimage_points(p);
        for (const auto& q : pre.points()) out.push_back(q);
    }
    return FinitePointSet::of(std::move(out));
}

} // namespace

BoundedResult pinv(const Model& m, const OpenIntervalSet& seed, const SaturationOptions& opt) {
    auto [set, st] = saturate(seed, opt, seed.size(), [&](const OpenIntervalSet& a) {
        return set_union(a, m.image_mod(a));
    });
    return {std::move(set), st.first, st.second, Direction::UnderApproximation};
}

PointCloudResult pinv(const Model& m, const FinitePointSet& seed, const SaturationOptions& opt) {
    auto [set, st] = saturate(seed, opt, seed.size(), [&](const FinitePointSet& a) {
        return forward_points(m, a);
    });
    return {std::move(set), st.first, st.second, Direction::UnderApproximation};
}

BoundedResult ninv(const Model& m, const OpenIntervalSet& seed, const SaturationOptions& opt) {
    auto [set, st] = saturate(seed, opt, seed.size(), [&](const OpenIntervalSet& a) {
        return set_union(a, m.preimage(a));
    });
    return {std::move(set), st.first, st.second, Direction::UnderApproximation};
}

PointCloudResult ninv(const Model& m, const FinitePointSet& seed, const SaturationOptions& opt) {
    auto [set, st] = saturate(seed, opt, seed.size(), [&](const FinitePointSet& a) {
        return backward_points(m, a);
    });
    return {std::move(set), st.first, st.second, Direction::UnderApproximation};
}

BoundedResult inv(const Model& m, const OpenIntervalSet& seed, const SaturationOptions& opt) {
    auto [set, st] = saturate(seed, opt, seed.size(), [&](const OpenIntervalSet& a) {
        OpenIntervalSet fwd = set_union(a, m.image_mod(a));
        return set_union(fwd, m.preimage(fwd));
    });
    return {std::move(set), st.first, st.second, Direction::UnderApproximation};
}

PointCloudResult inv(const Model& m, const FinitePointSet& seed, const SaturationOptions& opt) {
    auto [set, st] = saturate(seed, opt, seed.size(), [&](const FinitePointSet& a) {
        return backward_points(m, forward_points(m, a));
    });
    return {std::move(set), st.first, st.second, Direction::UnderApproximation};
}

BoundedResult lambda_s(const Model& m, const SaturationOptions& opt) {
    PointCloudResult cloud = ninv(m, m.exceptional(), opt);
    OpenIntervalSet open = split_at(m.domain_open(), cloud.points);
    return {std::move(open), cloud.status, cloud.depth, Direction::OverApproximation};
}

SigmaZed sigma_and_zed(const Model& m, std::size_t depth, const Rational& delta,
                       const SaturationOptions& opt) {
    SaturationOptions cloud_opt = opt;
    cloud_opt.max_depth = depth;

    SigmaZed out;
    out.lambda = lambda_s(m, cloud_opt);

    SatStatus worst = out.lambda.status;
    std::vector<Interval> sigma_raw;
    for (const auto& c : m.exceptional().points()) {
        WitnessHull wh;
        wh.witness = c;
        wh.cloud = ninv(m, FinitePointSet::of({c}), cloud_opt);
        wh.hull = dense_run_hull(wh.cloud.points, delta);
        if (wh.cloud.status != SatStatus::Stabilized) worst = wh.cloud.status;
        for (const auto& iv : wh.hull.intervals()) sigma_raw.push_back(iv);
        out.witness_hulls.push_back(std::move(wh));
    }

    OpenIntervalSet sigma_set = normalize(std::move(sigma_raw));
    // keeping zed clear of cl(sigma) is what makes the pair disjoint at
    // finite depth
    OpenIntervalSet zed_set = regular_difference(out.lambda.set, sigma_set);

    out.sigma = {std::move(sigma_set), worst, depth, Direction::UnderApproximation};
    out.zed = {std::move(zed_set), worst, depth, Direction::OverApproximation};
    return out;
}

LambdaMembership lambda_membership(const Model& m, const Rational& x, std::size_t step_cap) {
    std::set<Rational> seen;
    OrbitPoint cur(x);
    for (std::size_t step = 0; step <= step_cap; ++step) {
        if (m.exceptional().contains(cur.value())) {
            return {LambdaVerdict::HitsExceptional, step};
        }
        if (!seen.insert(cur.value()).second) {
            return {LambdaVerdict::InLambda, step};
        }
        cur = m.eval(cur);
    }
    return {LambdaVerdict::Undecided, step_cap};
}

} // namespace pmdecomp
