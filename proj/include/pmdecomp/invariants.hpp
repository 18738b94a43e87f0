#pragma once

#include "pmdecomp/interval_set.hpp"
#include "pmdecomp/pwmap.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pmdecomp {

// Every saturation operator here is depth-bounded and reports how far it
// got. The true objects are usually infinite; nothing is silently
// truncated.
enum class SatStatus { Stabilized, Truncated, ComplexityExceeded };
enum class Direction { UnderApproximation, OverApproximation };

std::string to_string(SatStatus s);
std::string to_string(Direction d);

struct BoundedResult {
    OpenIntervalSet set;
    SatStatus status = SatStatus::Truncated;
    std::size_t depth = 0; // rounds applied (Stabilized: last round that changed anything)
    Direction direction = Direction::UnderApproximation;
};

struct PointCloudResult {
    FinitePointSet points;
    SatStatus status = SatStatus::Truncated;
    std::size_t depth = 0;
    Direction direction = Direction::UnderApproximation;
};

struct SaturationOptions {
    std::size_t max_depth = 12;
    std::size_t complexity_cap = 100000; // intervals or points, whichever carrier
};

// Least forward-invariant hull: A ∪ f(A\S) ∪ f²(A\S) ∪ ...
BoundedResult pinv(const Model& m, const OpenIntervalSet& seed, const SaturationOptions& opt);
PointCloudResult pinv(const Model& m, const FinitePointSet& seed, const SaturationOptions& opt);

// Backward saturation: ∪_n f^{-n}(A).
BoundedResult ninv(const Model& m, const OpenIntervalSet& seed, const SaturationOptions& opt);
PointCloudResult ninv(const Model& m, const FinitePointSet& seed, const SaturationOptions& opt);

// Least fully invariant hull: one forward sweep then one backward sweep
// per round, stabilized when a whole round changes nothing.
BoundedResult inv(const Model& m, const OpenIntervalSet& seed, const SaturationOptions& opt);
PointCloudResult inv(const Model& m, const FinitePointSet& seed, const SaturationOptions& opt);

// Open over-approximation of the set of points whose orbit never meets S:
// the domain minus the closure of the depth-bounded backward cloud of S.
// Shrinks monotonically as depth grows.
BoundedResult lambda_s(const Model& m, const SaturationOptions& opt);

// One witness point of S together with the scale-delta regularization of
// its depth-bounded backward cloud.
struct WitnessHull {
    Rational witness;
    OpenIntervalSet hull;
    PointCloudResult cloud;
};

struct SigmaZed {
    BoundedResult sigma; // union of witness hulls; grows with depth
    BoundedResult zed;   // lambda approximation minus cl(sigma); shrinks
    BoundedResult lambda;
    std::vector<WitnessHull> witness_hulls;
};

// Evidence-scale split of the domain into the part organized around the
// grand orbit of S and the part whose orbits avoid S. sigma and zed are
// always disjoint and their union misses only finitely many points and
// the gaps the evidence cannot yet classify.
SigmaZed sigma_and_zed(const Model& m, std::size_t depth, const Rational& delta,
                       const SaturationOptions& opt);

enum class LambdaVerdict { InLambda, HitsExceptional, Undecided };

struct LambdaMembership {
    LambdaVerdict verdict;
    std::size_t step = 0; // hit step, or cycle-closing step for InLambda
};

// Exact membership of one rational in the avoid-S set: iterate until the
// orbit hits S, revisits an exact state (a cycle avoiding S), or the cap.
LambdaMembership lambda_membership(const Model& m, const Rational& x, std::size_t step_cap);

} // namespace pmdecomp
