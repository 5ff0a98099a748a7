#pragma once

// JSON encodings used by the CLI and test fixtures.
//
//   Dyadic      [m, e]  value m / 2^e; m is a string if it exceeds 64 bits
//   PLMap       {"tail": m, "nodes": [{"a": [m,e], "b": [m,e]}, ...]}
//   NormalForm  {"pos": [[i,r], ...], "neg": [[j,s], ...]}
//   BallStats   {"radius": R, "spheres": [...]}

#include "json.hpp"

#include "thompson/dyadic.hpp"
#include "thompson/embeddings.hpp"
#include "thompson/metrics.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

using Json = nlohmann::json;

Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

Json to_json(const PLMap& f);
PLMap plmap_from_json(const Json& j);

Json to_json(const NormalForm& a);
NormalForm normal_form_from_json(const Json& j);

Json to_json(const Rational& r);
Json to_json(const NormBounds& b);
Json to_json(const BallStats& s);
Json to_json(const CheckFailure& f);
Json to_json(const PresentationReport& r);
Json to_json(const SubgroupRelationsReport& r);
Json to_json(const QIReport& r);
Json to_json(const DistortionReport& r);

// "3/2" style text for rationals.
std::string to_string(const Rational& r);

}  // namespace thompson
