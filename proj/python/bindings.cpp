#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thompson/embeddings.hpp"
#include "thompson/metrics.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/plmap.hpp"
#include "thompson/serialize.hpp"

namespace py = pybind11;
using namespace thompson;

namespace {

py::object fraction(const Dyadic& d) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  py::int_ num(py::str(d.numerator().str()));
  py::int_ den = py::int_(1).attr("__lshift__")(d.exponent());
  return Fraction(num, den);
}

py::object fraction(const Rational& r) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.numerator(), r.denominator());
}

// Words cross the boundary as strings in the "x0 x1^-1" grammar.
NormalForm nf_of(const std::string& word) { return normalize(parse_word(word)); }

py::object json_to_py(const Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

std::vector<FxZnElement> samples_of(const std::vector<std::pair<std::string, std::int64_t>>& in) {
  std::vector<FxZnElement> out;
  for (const auto& [w, k] : in) out.push_back({nf_of(w), {k}});
  return out;
}

}  // namespace

PYBIND11_MODULE(_thompson, m) {
  m.doc() = "Thompson's group F";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<UnboundedSupportError>(m, "UnboundedSupportError",
                                                PyExc_ValueError);

  py::class_<NormalForm>(m, "NormalForm")
      .def(py::init([](const std::string& word) { return nf_of(word); }),
           py::arg("word") = "")
      .def_static("from_blocks",
                  [](const std::vector<std::pair<Index, std::int64_t>>& pos,
                     const std::vector<std::pair<Index, std::int64_t>>& neg) {
                    std::vector<Term> p;
                    std::vector<Term> n;
                    for (auto [i, e] : pos) p.push_back({i, e});
                    for (auto [i, e] : neg) n.push_back({i, e});
                    return NormalForm::from_blocks(std::move(p), std::move(n));
                  })
      .def_property_readonly("positive",
                             [](const NormalForm& a) {
                               std::vector<std::pair<Index, std::int64_t>> out;
                               for (const Term& t : a.positive()) out.emplace_back(t.index, t.exponent);
                               return out;
                             })
      .def_property_readonly("negative",
                             [](const NormalForm& a) {
                               std::vector<std::pair<Index, std::int64_t>> out;
                               for (const Term& t : a.negative()) out.emplace_back(t.index, t.exponent);
                               return out;
                             })
      .def("is_identity", &NormalForm::is_identity)
      .def("to_json", [](const NormalForm& a) { return json_to_py(to_json(a)); })
      .def("__mul__", [](const NormalForm& a, const NormalForm& b) { return multiply(a, b); })
      .def("__invert__", [](const NormalForm& a) { return invert(a); })
      .def("__pow__", [](const NormalForm& a, std::int64_t n) { return power(a, n); })
      .def("__eq__", [](const NormalForm& a, const NormalForm& b) { return a == b; })
      .def("__hash__", [](const NormalForm& a) { return py::hash(py::str(to_string(a))); })
      .def("__str__", [](const NormalForm& a) { return to_string(a); })
      .def("__repr__", [](const NormalForm& a) { return "NormalForm('" + to_string(a) + "')"; });

  py::class_<PLMap>(m, "PLMap")
      .def(py::init<>())
      .def_static("generator", &generator, py::arg("k"))
      .def_property_readonly("tail", &PLMap::tail)
      .def_property_readonly("nodes",
                             [](const PLMap& f) {
                               py::list out;
                               for (const Breakpoint& n : f.nodes()) {
                                 out.append(py::make_tuple(fraction(n.a), fraction(n.b)));
                               }
                               return out;
                             })
      .def("is_identity", &PLMap::is_identity)
      .def("__call__",
           [](const PLMap& f, const py::object& t) {
             py::object q = py::module_::import("fractions").attr("Fraction")(t);
             py::int_ den = q.attr("denominator");
             py::int_ num = q.attr("numerator");
             std::size_t e = py::cast<std::size_t>(den.attr("bit_length")()) - 1;
             if (!den.equal(py::int_(1).attr("__lshift__")(e))) {
               throw py::value_error("argument must be a dyadic rational");
             }
             Dyadic d(BigInt(py::cast<std::string>(py::str(num)).c_str()),
                      static_cast<std::uint32_t>(e));
             return fraction(f.evaluate(d));
           })
      .def("__mul__", [](const PLMap& f, const PLMap& g) { return compose(f, g); })
      .def("__invert__", [](const PLMap& f) { return invert(f); })
      .def("__eq__", [](const PLMap& f, const PLMap& g) { return f == g; })
      .def("__hash__", [](const PLMap& f) { return py::hash(py::bytes(f.key())); })
      .def("to_json", [](const PLMap& f) { return json_to_py(to_json(f)); });

  py::class_<NormBounds>(m, "NormBounds")
      .def_readonly("lemma1_lb", &NormBounds::lemma1_lb)
      .def_property_readonly("prop2_lb", [](const NormBounds& b) { return fraction(b.prop2_lb); })
      .def_readonly("prop2_ub", &NormBounds::prop2_ub);

  py::class_<CayleyBall>(m, "CayleyBall")
      .def_static(
          "build_f",
          [](int radius, std::size_t cap_states, unsigned workers, bool track_parents) {
            return CayleyBall::build_f(radius, {cap_states, workers, track_parents});
          },
          py::arg("radius"), py::arg("cap_states") = 10'000'000, py::arg("workers") = 1,
          py::arg("track_parents") = false)
      .def_property_readonly("radius", &CayleyBall::radius)
      .def_property_readonly("sphere_sizes", &CayleyBall::sphere_sizes)
      .def("__len__", &CayleyBall::size)
      .def("distance",
           [](const CayleyBall& b, const PLMap& f) { return b.distance(f); })
      .def("geodesic_word", [](const CayleyBall& b, std::size_t i) {
        if (i >= b.size()) throw py::index_error();
        return format_word(geodesic_word(b, i));
      });

  m.def("normalize", &nf_of, py::arg("word"));
  m.def("multiply", &multiply);
  m.def("shift", &shift, py::arg("a"), py::arg("k"));
  m.def("d_statistic", &d_statistic);
  m.def(
      "from_word", [](const std::string& word) { return from_word(parse_word(word)); },
      py::arg("word"));
  m.def("lemma1_lower_bound", &lemma1_lower_bound);
  m.def("norm_bounds", &norm_bounds);
  m.def("rewrite_to_finite_gens",
        [](const NormalForm& a) { return format_word(rewrite_to_finite_gens(a)); });
  m.def(
      "exact_norm",
      [](const std::string& word, int max_radius, std::size_t cap_states) {
        BallOptions o;
        o.cap_states = cap_states;
        return exact_norm(from_word(parse_word(word)), max_radius, o);
      },
      py::arg("word"), py::arg("max_radius") = 10, py::arg("cap_states") = 10'000'000);
  m.def(
      "ball_sizes",
      [](int radius, unsigned workers) {
        BallOptions o;
        o.workers = workers;
        return ball_sizes(radius, o).sphere_sizes;
      },
      py::arg("radius"), py::arg("workers") = 1);
  m.def(
      "check_presentation",
      [](Index max_index, std::size_t samples, std::uint64_t seed) {
        PresentationCheckOptions o;
        o.max_index = max_index;
        o.phi_samples = samples;
        o.seed = seed;
        return json_to_py(to_json(check_presentation(o)));
      },
      py::arg("max_index") = 8, py::arg("samples") = 200, py::arg("seed") = 1);

  m.def("embed", &embed, py::arg("x"), py::arg("k"));
  m.def(
      "embed_n",
      [](const NormalForm& x, const std::vector<std::int64_t>& k) { return embed_n(x, k); },
      py::arg("x"), py::arg("k"));
  m.def("closed_form_embed", &closed_form_embed, py::arg("x"), py::arg("k"));
  m.def(
      "verify_subgroup_relations",
      [](int n, int max_k) {
        SubgroupRelationsOptions o;
        o.n = n;
        o.max_k = max_k;
        return json_to_py(to_json(verify_subgroup_relations(o)));
      },
      py::arg("n") = 1, py::arg("max_k") = 5);
  m.def(
      "qi_check",
      [](const std::vector<std::pair<std::string, std::int64_t>>& samples, int max_radius) {
        auto s = samples_of(samples);
        return json_to_py(to_json(qi_check(s, max_radius)));
      },
      py::arg("samples"), py::arg("max_radius") = 8,
      "Samples are (word, k) pairs; returns the JSON report as a dict.");
  m.def(
      "h_distortion",
      [](const std::string& subgroup, int h_radius, int f_radius) {
        SubgroupSpec spec = parse_subgroup_spec(subgroup);
        DistortionOptions o;
        o.generator_set = spec.name;
        o.envelope_applies = spec.envelope_applies;
        return json_to_py(to_json(h_distortion(spec.generators, h_radius, f_radius, o)));
      },
      py::arg("subgroup") = "fxz", py::arg("h_radius") = 4, py::arg("f_radius") = 8);
}
