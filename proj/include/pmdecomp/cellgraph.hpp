#pragma once

#include "pmdecomp/interval_set.hpp"
#include "pmdecomp/invariants.hpp"
#include "pmdecomp/pwmap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pmdecomp {

// Resolution-delta partition of the domain: cuts contain all of S plus a
// uniform refinement so that no gap exceeds delta. Cells are the open
// intervals between consecutive cuts; each cell lies inside one affine lap
// and contains no exceptional point.
struct CellPartition {
    FinitePointSet cuts;
    Rational delta;

    std::size_t cell_count() const { return cuts.size() - 1; }
    Interval cell(std::size_t i) const {
        return {cuts.points()[i], cuts.points()[i + 1]};
    }
    // nullopt when x sits exactly on a cut.
    std::optional<std::size_t> cell_index(const Rational& x) const;
};

CellPartition build_partition(const Model& m, const Rational& delta, std::size_t cell_cap);

// Finite shadow of the dynamics: cell -> cell edges wherever the image of
// a cell overlaps another cell with positive length (touching endpoints
// carry no edge). The image of a cell is one open interval, so the
// successors of a cell form a contiguous index range.
struct TransitionGraph {
    CellPartition partition;
    std::vector<std::pair<std::size_t, std::size_t>> succ; // inclusive ranges
    std::vector<std::size_t> component_id;                 // undirected component per cell
    std::size_t component_count = 0;

    std::size_t cell_count() const { return partition.cell_count(); }
};

TransitionGraph build_graph(const Model& m, const Rational& delta, std::size_t cell_cap);

// Smallest cell set containing the seeds and closed under successors and
// predecessors: the union of undirected components touching the seeds.
std::vector<std::size_t> grand_orbit_cells(const TransitionGraph& g,
                                           const std::vector<std::size_t>& seeds);

// Diamond of the union of the given cells.
OpenIntervalSet region_of_cells(const TransitionGraph& g, const std::vector<std::size_t>& cells);

// All cells entirely inside the region.
std::vector<std::size_t> cells_of_region(const TransitionGraph& g, const OpenIntervalSet& region);

enum class Transitivity { Supported, RefutedAtResolution, Unknown };
std::string to_string(Transitivity t);

struct TransitivityOptions {
    std::size_t samples = 16;
    std::size_t steps = 4096;
    Rational eps_cover = 0; // <= 0 means 4 * delta
    std::uint64_t rng_seed = 0x5eedau;
};

struct TransitivityReport {
    Transitivity verdict = Transitivity::Unknown;
    std::size_t scc_count = 0;
    std::size_t bins_total = 0;
    std::size_t bins_covered_best = 0;
    OpenIntervalSet refutation_witness; // forward-invariant proper subregion, when refuted
};

// Three-valued transitivity check for a computed region: one forward SCC
// plus an orbit sample covering every eps_cover bin supports it; a proper
// forward-closed subregion refutes it at this resolution.
TransitivityReport transitivity(const Model& m, const TransitionGraph& g,
                                const OpenIntervalSet& region, const TransitivityOptions& opt);

struct Component {
    OpenIntervalSet region; // diamond-fixed
    FinitePointSet witnesses;
    TransitivityReport transitivity;
};

struct Decomposition {
    Rational delta;
    std::size_t depth = 0;
    OpenIntervalSet sigma; // diamond of the union of all regions
    OpenIntervalSet zed;   // domain minus the closure of that union
    std::vector<Component> components;
    std::vector<std::string> notes;
    SigmaZed evidence;
};

struct DecompositionOptions {
    Rational delta;
    std::size_t depth = 12;
    std::size_t cell_cap = 100000;
    SaturationOptions saturation;
    TransitivityOptions transit;
};

// The headline computation: one candidate region per point of S (the
// undirected hull of its abutting cells, both sides agreeing), grouped by
// identical region, kept only when some witness's backward cloud is
// delta-dense inside the region.
Decomposition minimal_components(const Model& m, const DecompositionOptions& opt);

// Reconstructs the union of candidate regions witnessed by the given
// points of S; a computed component must reproduce itself from its own
// witness trace.
OpenIntervalSet region_from_witnesses(const TransitionGraph& g, const FinitePointSet& witnesses);

enum class GermVerdict { NonDegenerate, ShrinksToNowhereDense, Unknown };
std::string to_string(GermVerdict v);

struct GermLevel {
    Rational radius;
    ClosedIntervalSet hull;   // closure of the bounded fully-invariant hull of the ball
    OpenIntervalSet region;   // interior of the cumulative intersection
};

struct GermReport {
    Rational center;
    Rational r0;
    std::vector<GermLevel> levels;
    GermVerdict verdict = GermVerdict::Unknown;
    OpenIntervalSet region; // final cumulative region
};

// Shrinking-ball germ: exact bounded fully-invariant hulls of balls
// (x - r0 2^-n, x + r0 2^-n), closures intersected cumulatively. The
// verdict is NonDegenerate when the regions stabilize on something
// containing a whole delta-cell, ShrinksToNowhereDense when every piece of
// the final hull is thinner than delta (or the hull is empty), Unknown
// otherwise.
GermReport germ(const Model& m, const Rational& x, const Rational& r0, std::size_t levels,
                const Rational& delta, const SaturationOptions& sat);

} // namespace pmdecomp
