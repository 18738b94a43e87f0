#include "pmdecomp/serialize.hpp"

#include "pmdecomp/errors.hpp"

#include <fstream>

namespace pmdecomp {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const OpenIntervalSet& o) {
    Json arr = Json::array();
    for (const auto& iv : o.intervals()) {
        arr.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
    }
    return arr;
}

Json to_json(const ClosedIntervalSet& f) {
    Json arr = Json::array();
    for (const auto& iv : f.intervals()) {
        arr.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
    }
    return arr;
}

Json to_json(const FinitePointSet& p) {
    Json arr = Json::array();
    for (const auto& x : p.points()) arr.push_back(to_string(x));
    return arr;
}

Json to_json(const BoundedResult& r) {
    return Json{{"intervals", to_json(r.set)},
                {"status", to_string(r.status)},
                {"depth", r.depth},
                {"direction", to_string(r.direction)}};
}

Json to_json(const PointCloudResult& r) {
    return Json{{"points", to_json(r.points)},
                {"status", to_string(r.status)},
                {"depth", r.depth},
                {"direction", to_string(r.direction)}};
}

Json model_to_json(const Model& m) {
    Json pieces = Json::array();
    for (const auto& p : m.pieces()) {
        pieces.push_back(Json{{"slope", to_string(p.slope)}, {"intercept", to_string(p.intercept)}});
    }
    Json extra = Json::array();
    for (const auto& x : m.exceptional().points()) {
        if (!m.breakpoints().contains(x)) extra.push_back(to_string(x));
    }
    return Json{{"breakpoints", to_json(m.breakpoints())},
                {"pieces", pieces},
                {"extra_exceptional", extra}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ConfigError("rational must be a string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

OpenIntervalSet open_set_from_json(const Json& j) {
    std::vector<Interval> raw;
    for (const auto& pair : j) {
        raw.push_back({rational_from_json(pair.at(0)), rational_from_json(pair.at(1))});
    }
    return normalize(std::move(raw));
}

ClosedIntervalSet closed_set_from_json(const Json& j) {
    std::vector<ClosedInterval> raw;
    for (const auto& pair : j) {
        raw.push_back({rational_from_json(pair.at(0)), rational_from_json(pair.at(1))});
    }
    return normalize_closed(std::move(raw));
}

FinitePointSet point_set_from_json(const Json& j) {
    std::vector<Rational> pts;
    for (const auto& x : j) pts.push_back(rational_from_json(x));
    return FinitePointSet::of(std::move(pts));
}

Model model_from_json(const Json& j) {
    std::vector<Rational> breakpoints;
    for (const auto& b : j.at("breakpoints")) breakpoints.push_back(rational_from_json(b));
    std::vector<Piece> pieces;
    for (const auto& p : j.at("pieces")) {
        pieces.push_back({rational_from_json(p.at("slope")), rational_from_json(p.at("intercept"))});
    }
    std::vector<Rational> extra;
    if (j.contains("extra_exceptional")) {
        for (const auto& x : j.at("extra_exceptional")) extra.push_back(rational_from_json(x));
    }
    return Model::create(std::move(breakpoints), std::move(pieces), std::move(extra));
}

Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open map file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ConfigError("map file " + path + " is not valid JSON: " + e.what());
    }
    return model_from_json(j);
}

} // namespace pmdecomp
