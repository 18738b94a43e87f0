#include "pmdecomp/report.hpp"

#include <sstream>

namespace pmdecomp {

DecompositionOptions RunConfig::decomposition_options(const Model& m) const {
    DecompositionOptions opt;
    opt.delta = effective_delta(m);
    opt.depth = depth;
    opt.cell_cap = cell_cap;
    opt.saturation.max_depth = depth;
    opt.saturation.complexity_cap = cell_cap;
    opt.transit = transit;
    return opt;
}

Json validate_summary(const Model& m) {
    Json pieces = Json::array();
    const auto& d = m.breakpoints().points();
    for (std::size_t k = 0; k < m.pieces().size(); ++k) {
        pieces.push_back(Json{{"lap", Json::array({to_string(d[k]), to_string(d[k + 1])})},
                              {"slope", to_string(m.pieces()[k].slope)},
                              {"intercept", to_string(m.pieces()[k].intercept)},
                              {"image", Json::array({to_string(m.piece_image(k).lo),
                                                     to_string(m.piece_image(k).hi)})}});
    }
    return Json{{"valid", true},
                {"domain", Json::array({to_string(m.domain_lo()), to_string(m.domain_hi())})},
                {"piece_count", m.pieces().size()},
                {"pieces", pieces},
                {"exceptional", to_json(m.exceptional())},
                {"checks",
                 Json{{"strictly_monotone_pieces", true},
                      {"images_inside_domain", true},
                      {"exceptional_contains_breakpoints", true}}}};
}

namespace {

Json transitivity_to_json(const TransitivityReport& t) {
    Json j{{"verdict", to_string(t.verdict)},
           {"scc_count", t.scc_count},
           {"bins_total", t.bins_total},
           {"bins_covered_best", t.bins_covered_best}};
    if (t.verdict == Transitivity::RefutedAtResolution) {
        j["refutation_witness"] = to_json(t.refutation_witness);
    }
    return j;
}

Json cascade_to_json(const Model& m, const TransitionGraph& g, const Cascade& c,
                     std::size_t stages_shown) {
    (void)m;
    Json stages = Json::array();
    for (std::size_t n = 0; n < std::min(stages_shown, c.stages.size()); ++n) {
        stages.push_back(to_json(c.stages[n]));
    }
    CoreReport cr = core(c, c.stages.size());
    DomainReport dr = domain(g, c);
    Json j{{"basis_cells", c.basis.size()},
           {"depth", c.depth},
           {"stages", stages},
           {"core", Json{{"closed", to_json(cr.core)},
                         {"diamond", to_json(cr.core_diamond)},
                         {"matching_stage", cr.matching_stage ? Json(*cr.matching_stage) : Json()}}},
           {"domain", Json{{"region", to_json(dr.region)}, {"matches", dr.matches_component}}}};
    if (c.empty_stage) j["empty_stage"] = *c.empty_stage;
    return j;
}

} // namespace

Json decompose_report(const Model& m, const RunConfig& cfg, const std::string& map_name) {
    const Rational delta = cfg.effective_delta(m);
    DecompositionOptions opt = cfg.decomposition_options(m);

    Decomposition d = minimal_components(m, opt);
    TransitionGraph g = build_graph(m, delta, cfg.cell_cap);

    Json components = Json::array();
    for (const auto& comp : d.components) {
        Cascade c = build_cascade(m, g, comp.region, cfg.cascade_m, cfg.depth);
        components.push_back(Json{{"region", to_json(comp.region)},
                                  {"witnesses", to_json(comp.witnesses)},
                                  {"transitivity", transitivity_to_json(comp.transitivity)},
                                  {"cascade", cascade_to_json(m, g, c, cfg.stages)}});
    }

    std::vector<OrbitSample> samples = sweep(m, cfg.grid, cfg.steps);
    OracleVerdict verdict = validate(m, d, samples);

    Json violations = Json::array();
    for (const auto& viol : verdict.violations) {
        violations.push_back(Json{{"start", to_string(viol.start)},
                                  {"escapee", to_string(viol.escapee)},
                                  {"component", viol.component}});
    }
    Json splits = Json::array();
    for (const auto& sp : verdict.split_possible) {
        splits.push_back(Json{{"component", sp.component}, {"at", to_string(sp.at)}});
    }
    Json disagreeing = Json::array();
    for (const auto& x : verdict.disagreeing_starts) disagreeing.push_back(to_string(x));

    PointCloudResult s_cloud = ninv(m, m.exceptional(), opt.saturation);
    GapStats gaps = gap_statistics(s_cloud.points, {m.domain_lo(), m.domain_hi()});
    Json hist = Json::array();
    for (const auto& [gap, count] : gaps.histogram) {
        hist.push_back(Json::array({to_string(gap), count}));
    }

    Json witness_hulls = Json::array();
    for (const auto& wh : d.evidence.witness_hulls) {
        witness_hulls.push_back(Json{{"witness", to_string(wh.witness)},
                                     {"hull", to_json(wh.hull)},
                                     {"cloud_size", wh.cloud.points.size()},
                                     {"cloud_status", to_string(wh.cloud.status)}});
    }

    Rational eps_cover =
        cfg.transit.eps_cover > 0 ? cfg.transit.eps_cover : Rational(4) * delta;

    return Json{
        {"schema_version", kReportSchemaVersion},
        {"map", map_name},
        {"parameters",
         Json{{"delta", to_string(delta)},
              {"depth", cfg.depth},
              {"cascade_m", cfg.cascade_m},
              {"stages", cfg.stages},
              {"grid", cfg.grid},
              {"steps", cfg.steps},
              {"cell_cap", cfg.cell_cap},
              {"eps_cover", to_string(eps_cover)},
              {"transitivity_samples", cfg.transit.samples},
              {"transitivity_steps", cfg.transit.steps}}},
        {"model", model_to_json(m)},
        {"decomposition",
         Json{{"sigma",
               Json{{"intervals", to_json(d.sigma)},
                    {"status", to_string(d.evidence.sigma.status)},
                    {"depth", d.depth},
                    {"direction", to_string(Direction::UnderApproximation)}}},
              {"zed",
               Json{{"intervals", to_json(d.zed)},
                    {"status", to_string(d.evidence.zed.status)},
                    {"depth", d.depth},
                    {"direction", to_string(Direction::OverApproximation)}}},
              {"component_count", d.components.size()},
              {"components", components},
              {"notes", d.notes}}},
        {"evidence",
         Json{{"sigma", to_json(d.evidence.sigma)},
              {"zed", to_json(d.evidence.zed)},
              {"lambda", to_json(d.evidence.lambda)},
              {"witness_hulls", witness_hulls}}},
        {"oracle",
         Json{{"grid", cfg.grid},
              {"steps", cfg.steps},
              {"samples", samples.size()},
              {"surviving", verdict.surviving},
              {"assigned", verdict.assigned},
              {"agreement", verdict.agreement},
              {"disagreeing_starts", disagreeing},
              {"violations", violations},
              {"split_possible", splits},
              {"s_cloud",
               Json{{"size", s_cloud.points.size()},
                    {"status", to_string(s_cloud.status)},
                    {"depth", s_cloud.depth},
                    {"max_gap", to_string(gaps.max_gap)},
                    {"gap_histogram", hist}}}}}};
}

std::string orbit_line(const Model& m, const Rational& x, std::size_t n) {
    std::string line;
    for (const auto& p : m.forward_orbit(x, n)) {
        if (!line.empty()) line += ',';
        line += to_string(p);
    }
    return line;
}

std::string cobweb_csv(const Model& m, const RunConfig& cfg) {
    CellPartition part = build_partition(m, cfg.effective_delta(m), cfg.cell_cap);
    std::ostringstream out;
    for (std::size_t i = 0; i < part.cell_count(); ++i) {
        Interval cell = part.cell(i);
        Rational len = cell.hi - cell.lo;
        for (int k = 1; k <= 2; ++k) {
            Rational x = cell.lo + len * Rational(k, 3);
            OrbitPoint y = m.eval(OrbitPoint(x));
            if (y.is_bullet()) continue;
            out << to_string(x) << ',' << to_string(y.value()) << '\n';
        }
    }
    return out.str();
}

std::string regions_csv(const Model& m, const RunConfig& cfg) {
    Decomposition d = minimal_components(m, cfg.decomposition_options(m));
    std::ostringstream out;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        for (const auto& iv : d.components[c].region.intervals()) {
            out << to_string(iv.lo) << ',' << to_string(iv.hi) << ",component_" << c << '\n';
        }
    }
    return out.str();
}

} // namespace pmdecomp
