#include "pmdecomp/report.hpp"
#include "pmdecomp/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace pmdecomp;

namespace {

using StrPairs = std::vector<std::pair<std::string, std::string>>;

OpenIntervalSet set_from(const StrPairs& pairs) {
    std::vector<Interval> raw;
    raw.reserve(pairs.size());
    for (const auto& [lo, hi] : pairs) raw.push_back({parse_rational(lo), parse_rational(hi)});
    return normalize(std::move(raw));
}

StrPairs set_to(const OpenIntervalSet& o) {
    StrPairs out;
    out.reserve(o.size());
    for (const auto& iv : o.intervals()) out.push_back({to_string(iv.lo), to_string(iv.hi)});
    return out;
}

RunConfig config_from(const std::optional<std::string>& delta, std::size_t depth,
                      std::size_t cascade_m, std::size_t stages, std::size_t grid,
                      std::size_t steps) {
    RunConfig cfg;
    if (delta) cfg.delta = parse_rational(*delta);
    cfg.depth = depth;
    cfg.cascade_m = cascade_m;
    cfg.stages = stages;
    cfg.grid = grid;
    cfg.steps = steps;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_pmdecomp, m) {
    m.doc() = "exact decomposition of piecewise affine interval maps";

    py::class_<Model>(m, "Model")
        .def_static("from_json", [](const std::string& text) {
            return model_from_json(Json::parse(text));
        })
        .def_static("from_file", &load_model_file)
        .def_property_readonly("breakpoints",
                               [](const Model& mod) {
                                   std::vector<std::string> out;
                                   for (const auto& d : mod.breakpoints().points())
                                       out.push_back(to_string(d));
                                   return out;
                               })
        .def_property_readonly("exceptional",
                               [](const Model& mod) {
                                   std::vector<std::string> out;
                                   for (const auto& s : mod.exceptional().points())
                                       out.push_back(to_string(s));
                                   return out;
                               })
        .def_property_readonly("domain",
                               [](const Model& mod) {
                                   return std::make_pair(to_string(mod.domain_lo()),
                                                         to_string(mod.domain_hi()));
                               })
        .def("eval",
             [](const Model& mod, const std::string& x) -> std::optional<std::string> {
                 OrbitPoint y = mod.eval(OrbitPoint(parse_rational(x)));
                 if (y.is_bullet()) return std::nullopt;
                 return to_string(y.value());
             })
        .def("orbit",
             [](const Model& mod, const std::string& x, std::size_t n) {
                 std::vector<std::optional<std::string>> out;
                 for (const auto& p : mod.forward_orbit(parse_rational(x), n)) {
                     if (p.is_bullet())
                         out.push_back(std::nullopt);
                     else
                         out.push_back(to_string(p.value()));
                 }
                 return out;
             })
        .def("image_mod",
             [](const Model& mod, const StrPairs& o) { return set_to(mod.image_mod(set_from(o))); })
        .def("preimage",
             [](const Model& mod, const StrPairs& o) { return set_to(mod.preimage(set_from(o))); })
        .def("preimage_points", [](const Model& mod, const std::string& y) {
            std::vector<std::string> out;
            FinitePointSet pre = mod.preimage_points(parse_rational(y));
            for (const auto& x : pre.points()) out.push_back(to_string(x));
            return out;
        });

    m.def("normalize", [](const StrPairs& o) { return set_to(set_from(o)); });
    m.def("diamond", [](const StrPairs& o) { return set_to(diamond(set_from(o))); });
    m.def("intersect",
          [](const StrPairs& a, const StrPairs& b) { return set_to(intersect(set_from(a), set_from(b))); });
    m.def("set_union",
          [](const StrPairs& a, const StrPairs& b) { return set_to(set_union(set_from(a), set_from(b))); });
    m.def("regular_difference", [](const StrPairs& a, const StrPairs& b) {
        return set_to(regular_difference(set_from(a), set_from(b)));
    });
    m.def("meets",
          [](const StrPairs& a, const StrPairs& b) { return meets(set_from(a), set_from(b)); });
    m.def("is_regular_open", [](const StrPairs& o) { return is_regular_open(set_from(o)); });

    m.def(
        "decompose_json",
        [](const Model& mod, const std::optional<std::string>& delta, std::size_t depth,
           std::size_t cascade_m, std::size_t stages, std::size_t grid, std::size_t steps,
           const std::string& name) {
            RunConfig cfg = config_from(delta, depth, cascade_m, stages, grid, steps);
            return decompose_report(mod, cfg, name).dump();
        },
        py::arg("model"), py::arg("delta") = std::nullopt, py::arg("depth") = 12,
        py::arg("cascade_m") = 4, py::arg("stages") = 4, py::arg("grid") = 200,
        py::arg("steps") = 512, py::arg("name") = "model");

    m.def("orbit_line", [](const Model& mod, const std::string& x, std::size_t n) {
        return orbit_line(mod, parse_rational(x), n);
    });
}
