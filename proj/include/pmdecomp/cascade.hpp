#pragma once

#include "pmdecomp/cellgraph.hpp"
#include "pmdecomp/interval_set.hpp"
#include "pmdecomp/pwmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmdecomp {

// Decreasing sequence of forward-invariant regular open stages built from
// a basis of cells inside one component: stage n is the intersection of
// the regularized forward saturations of the first n basis cells. An empty
// stage is surfaced, never repaired: it is a minimality refutation at this
// resolution.
struct Cascade {
    OpenIntervalSet component;
    std::vector<std::size_t> basis;
    std::vector<OpenIntervalSet> stages; // stages[n] is U_{n+1}
    std::optional<std::size_t> empty_stage; // 1-based stage index, when one collapsed
    std::size_t depth = 0;
    Rational delta;
};

Cascade build_cascade(const Model& m, const TransitionGraph& g, const OpenIntervalSet& component,
                      std::size_t basis_count, std::size_t depth);

struct CoreReport {
    ClosedIntervalSet core;        // intersection of the first N stage closures
    OpenIntervalSet core_diamond;  // its regular-open part
    std::optional<std::size_t> matching_stage; // 1-based stage equal to the diamond
    std::size_t stages_used = 0;
};

CoreReport core(const Cascade& c, std::size_t n);

struct DomainReport {
    OpenIntervalSet region; // grand-orbit hull of the first stage
    bool matches_component = false;
};

// The fully invariant hull of any stage must reproduce the component the
// cascade was built in; a mismatch signals resolution insufficiency.
DomainReport domain(const TransitionGraph& g, const Cascade& c);

enum class CascadeRelation { MutuallyCofinal, Disjoint, Unknown };
std::string to_string(CascadeRelation r);

// Cascades with different domains are disjoint; with equal domains the
// relation is decided by exhibiting mutual stage inclusions among the
// available stages, else left Unknown.
CascadeRelation equivalent(const Cascade& a, const Cascade& b);

struct StageHit {
    std::size_t stage = 0;                // 1-based
    std::optional<std::size_t> first_hit; // least m with f^m(x) in the stage
};

// Per-stage first-hit record for one orbit; evidence toward membership in
// the intersection of the backward saturations of all stages.
std::vector<StageHit> typical_target_membership(const Model& m, const Rational& x,
                                                const Cascade& c, std::size_t horizon);

} // namespace pmdecomp
