#pragma once

#include "pmdecomp/cellgraph.hpp"
#include "pmdecomp/interval_set.hpp"
#include "pmdecomp/pwmap.hpp"

#include <cstddef>
#include <vector>

namespace pmdecomp {

// One exactly iterated orbit. An orbit either dies in the exceptional set,
// closes an exact cycle, or runs out of budget; the three cases are kept
// apart so nothing is over-claimed downstream.
struct OrbitSample {
    Rational start;
    std::vector<Rational> trajectory; // up to death, cycle closure, or the cap
    bool surviving = false;
    std::size_t bullet_step = 0; // first absorbing step when !surviving
    bool cycled = false;
    std::size_t cycle_start = 0; // index of the repeated state when cycled
    std::vector<Rational> tail;  // the cycle, or the final half of the budgeted run
};

// Equally spaced grid of gridN+1 starts, points of S skipped, exact
// iteration with cycle detection. Deterministic.
std::vector<OrbitSample> sweep(const Model& m, std::size_t grid_n, std::size_t steps);

struct ConfinementViolation {
    Rational start;
    Rational escapee; // orbit point outside the closure of the start's component
    std::size_t component = 0;
};

struct SplitDiagnostic {
    std::size_t component = 0;
    Rational at; // interior exceptional point no sampled tail crosses
};

struct OracleVerdict {
    std::size_t surviving = 0;
    std::size_t assigned = 0; // surviving samples whose tail meets some component
    std::size_t agreeing = 0; // assigned samples whose whole tail sits in one component
    double agreement = 1.0;   // agreeing / assigned, vacuously 1
    std::vector<Rational> disagreeing_starts;
    std::vector<ConfinementViolation> violations;
    std::vector<SplitDiagnostic> split_possible;
};

// Scores a decomposition against the sweep: tail membership agreement,
// trajectory confinement to component closures, and the no-tail-crosses
// diagnostic for interior exceptional points.
OracleVerdict validate(const Model& m, const Decomposition& d,
                       const std::vector<OrbitSample>& samples);

struct GapStats {
    Rational max_gap; // including the distances to the domain ends
    std::vector<std::pair<Rational, std::size_t>> histogram; // gap -> count, descending
};

GapStats gap_statistics(const FinitePointSet& cloud, const ClosedInterval& domain);

} // namespace pmdecomp
