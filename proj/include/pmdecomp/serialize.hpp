#pragma once

#include "pmdecomp/interval_set.hpp"
#include "pmdecomp/invariants.hpp"
#include "pmdecomp/pwmap.hpp"

#include <json.hpp>

namespace pmdecomp {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings (q omitted when 1); interval sets as
// arrays of [lo, hi] string pairs. Round-trips are bit-exact.

Json to_json(const Rational& r);
Json to_json(const OpenIntervalSet& o);
Json to_json(const ClosedIntervalSet& f);
Json to_json(const FinitePointSet& p);
Json to_json(const BoundedResult& r);
Json to_json(const PointCloudResult& r);
Json model_to_json(const Model& m);

Rational rational_from_json(const Json& j);
OpenIntervalSet open_set_from_json(const Json& j);
ClosedIntervalSet closed_set_from_json(const Json& j);
FinitePointSet point_set_from_json(const Json& j);

// Accepts { "breakpoints": [...], "pieces": [{"slope","intercept"}...],
// "extra_exceptional": [...] }. extra_exceptional is optional.
Model model_from_json(const Json& j);
Model load_model_file(const std::string& path);

} // namespace pmdecomp
