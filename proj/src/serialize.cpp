#include "thompson/serialize.hpp"

#include <stdexcept>

namespace thompson {

Json to_json(const Dyadic& d) {
  Json m;
  if (auto small = d.small_numerator()) {
    m = *small;
  } else {
    m = d.numerator().str();
  }
  return Json::array({m, d.exponent()});
}

Dyadic dyadic_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("dyadic must be [m, e]");
  }
  BigInt m;
  if (j[0].is_string()) {
    m = BigInt(j[0].get<std::string>().c_str());
  } else {
    m = j[0].get<std::int64_t>();
  }
  auto e = j[1].get<std::int64_t>();
  if (e < 0) throw std::invalid_argument("dyadic exponent must be nonnegative");
  Dyadic d(m, static_cast<std::uint32_t>(e));
  if (d.numerator() != m || d.exponent() != e) {
    throw std::invalid_argument("dyadic not in canonical form");
  }
  return d;
}

Json to_json(const PLMap& f) {
  Json nodes = Json::array();
  for (const Breakpoint& n : f.nodes()) {
    nodes.push_back({{"a", to_json(n.a)}, {"b", to_json(n.b)}});
  }
  return {{"tail", f.tail()}, {"nodes", std::move(nodes)}};
}

PLMap plmap_from_json(const Json& j) {
  std::vector<Breakpoint> nodes;
  for (const Json& n : j.at("nodes")) {
    nodes.push_back({dyadic_from_json(n.at("a")), dyadic_from_json(n.at("b"))});
  }
  return PLMap::from_nodes(std::move(nodes), j.at("tail").get<std::int64_t>());
}

namespace {

Json block_json(const std::vector<Term>& block) {
  Json out = Json::array();
  for (const Term& t : block) out.push_back({t.index, t.exponent});
  return out;
}

std::vector<Term> block_from_json(const Json& j) {
  std::vector<Term> out;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2) {
      throw std::invalid_argument("normal form terms must be [index, exponent]");
    }
    out.push_back({t[0].get<Index>(), t[1].get<std::int64_t>()});
  }
  return out;
}

}  // namespace

Json to_json(const NormalForm& a) {
  return {{"pos", block_json(a.positive())}, {"neg", block_json(a.negative())}};
}

NormalForm normal_form_from_json(const Json& j) {
  return NormalForm::from_blocks(block_from_json(j.at("pos")),
                                 block_from_json(j.at("neg")));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const Rational& r) { return {r.numerator(), r.denominator()}; }

Json to_json(const NormBounds& b) {
  return {{"lemma1_lb", b.lemma1_lb},
          {"prop2_lb", to_json(b.prop2_lb)},
          {"prop2_ub", b.prop2_ub}};
}

Json to_json(const BallStats& s) {
  return {{"radius", s.radius}, {"spheres", s.sphere_sizes}, {"total", s.total}};
}

Json to_json(const CheckFailure& f) {
  return {{"what", f.what}, {"witness", format_word(f.witness)}};
}

namespace {

template <class Report>
Json check_report_json(const Report& r) {
  Json failures = Json::array();
  for (const CheckFailure& f : r.failures) failures.push_back(to_json(f));
  return {{"passed", r.passed}, {"checks", r.checks}, {"failures", std::move(failures)}};
}

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const PresentationReport& r) { return check_report_json(r); }
Json to_json(const SubgroupRelationsReport& r) { return check_report_json(r); }

Json to_json(const QIReport& r) {
  Json samples = Json::array();
  for (const QISampleResult& s : r.samples) {
    samples.push_back({{"x", to_json(s.sample.x)},
                       {"k", s.sample.k},
                       {"image", to_json(s.image)},
                       {"image_word", to_string(s.image)},
                       {"closed_form_ok", optional_json(s.closed_form_ok)},
                       {"d_identity_ok", optional_json(s.d_identity_ok)},
                       {"source_norm", optional_json(s.source_norm)},
                       {"image_norm", optional_json(s.image_norm)},
                       {"exact", s.exact},
                       {"inequalities_ok", s.inequalities_ok},
                       {"passed", s.passed},
                       {"note", s.note}});
  }
  return {{"K", to_json(r.witness.K)},
          {"C", to_json(r.witness.C)},
          {"passed", r.passed},
          {"samples", std::move(samples)}};
}

Json to_json(const DistortionReport& r) {
  Json h = Json::array();
  for (const HValue& v : r.h_values) {
    h.push_back({{"r", v.r},
                 {"max_h_norm", v.max_h_norm},
                 {"h", to_json(v.value)},
                 {"witness", v.witness ? Json(to_string(*v.witness)) : Json(nullptr)},
                 {"within_envelope", v.within_envelope}});
  }
  Json samples = Json::array();
  for (const DistortionSample& s : r.samples) {
    samples.push_back({{"element", to_string(s.element)},
                       {"h_norm", s.h_norm},
                       {"g_norm", optional_json(s.g_norm)}});
  }
  return {{"generator_set", r.generator_set},
          {"h_radius", r.h_radius},
          {"f_radius", r.f_radius},
          {"h_values", std::move(h)},
          {"h_values_are_lower_bounds", true},
          {"beyond_radius", r.beyond_radius},
          {"envelope_applies", r.envelope_applies},
          {"envelope_holds", r.envelope_holds},
          {"samples", std::move(samples)}};
}

}  // namespace thompson
