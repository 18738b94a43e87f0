#pragma once

#include "pmdecomp/cascade.hpp"
#include "pmdecomp/cellgraph.hpp"
#include "pmdecomp/oracle.hpp"
#include "pmdecomp/serialize.hpp"

#include <optional>
#include <string>

namespace pmdecomp {

// Batch-run knobs. Everything lands in the report so runs are
// reproducible from their own output.
struct RunConfig {
    std::optional<Rational> delta; // default: domain length / 1024
    std::size_t depth = 12;
    std::size_t cascade_m = 4;
    std::size_t stages = 4;
    std::size_t grid = 200;
    std::size_t steps = 512;
    std::size_t cell_cap = 100000;
    TransitivityOptions transit;

    Rational effective_delta(const Model& m) const {
        return delta ? *delta : m.domain_length() / 1024;
    }
    DecompositionOptions decomposition_options(const Model& m) const;
};

inline constexpr int kReportSchemaVersion = 1;

// Model summary for the validate subcommand (piece table, S, invariant
// checks).
Json validate_summary(const Model& m);

// The full decompose pipeline: cell graph decomposition, per-component
// transitivity, cascades with core and domain checks, oracle sweep and
// scoring, gap statistics of the backward cloud of S. Deterministic:
// identical inputs give byte-identical reports.
Json decompose_report(const Model& m, const RunConfig& cfg, const std::string& map_name);

// Exact orbit as one comma-separated line ("bullet" once absorbed).
std::string orbit_line(const Model& m, const Rational& x, std::size_t n);

// cobweb.csv: x,f(x) pairs sampled per cell; regions.csv: lo,hi,label rows.
std::string cobweb_csv(const Model& m, const RunConfig& cfg);
std::string regions_csv(const Model& m, const RunConfig& cfg);

} // namespace pmdecomp
