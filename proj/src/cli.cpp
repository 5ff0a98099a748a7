#include "thompson/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "thompson/embeddings.hpp"
#include "thompson/metrics.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/plmap.hpp"
#include "thompson/serialize.hpp"
#include "thompson/words.hpp"

namespace thompson::cli {

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kVerificationFailed = 2;

struct Globals {
  bool json = false;
  std::size_t cap_states = 10'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;

  BallOptions ball() const {
    BallOptions o;
    o.cap_states = cap_states;
    o.workers = workers;
    return o;
  }
};

void print_nf(std::ostream& out, const Globals& g, const NormalForm& a) {
  if (g.json) {
    out << to_json(a).dump() << '\n';
  } else {
    out << to_string(a) << '\n';
  }
}

void print_failures(std::ostream& out, const std::vector<CheckFailure>& failures) {
  for (const CheckFailure& f : failures) {
    out << "FAIL: " << f.what << "; witness: " << format_word(f.witness) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in Thompson's group F", "thompson"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--cap-states", g.cap_states, "State cap for Cayley-ball searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for random sampling");
  app.add_option("--workers", g.workers, "Worker threads for ball expansion")
      ->check(CLI::Range(1u, 256u));

  std::string w1;
  std::string w2;
  std::int64_t shift_by = 0;
  int max_radius = 10;
  int radius = 0;
  Index max_index = 8;
  std::size_t samples = 200;
  std::vector<std::int64_t> ks;
  bool verify = false;
  std::string subgroup = "fxz";
  int h_radius = 4;
  int f_radius = 8;

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("word", w1)->required();
  auto* mul = app.add_subcommand("mul", "Product of two words in normal form");
  mul->add_option("a", w1)->required();
  mul->add_option("b", w2)->required();
  auto* inv = app.add_subcommand("inv", "Inverse in normal form");
  inv->add_option("word", w1)->required();
  auto* phi = app.add_subcommand("phi", "Shift x_i -> x_{i+k}");
  phi->add_option("word", w1)->required();
  phi->add_option("k", shift_by)->required()->check(CLI::NonNegativeNumber);
  auto* plmap = app.add_subcommand("plmap", "Breakpoints of the PL map of a word");
  plmap->add_option("word", w1)->required();
  auto* bounds = app.add_subcommand("bounds", "Norm bounds from the D statistic and breakpoints");
  bounds->add_option("word", w1)->required();
  auto* norm = app.add_subcommand("norm", "Exact word norm by Cayley-ball search");
  norm->add_option("word", w1)->required();
  norm->add_option("--max-radius", max_radius, "Search radius")
      ->check(CLI::NonNegativeNumber);
  auto* ball = app.add_subcommand("ball", "Sphere sizes of the Cayley ball");
  ball->add_option("R", radius)->required()->check(CLI::NonNegativeNumber);
  auto* check = app.add_subcommand("check", "Verify the presentations on the PL model");
  check->add_option("--max-index", max_index, "Largest index for x_i^-1 x_j x_i = x_j+1")
      ->check(CLI::Range(Index{2}, Index{10000}));
  check->add_option("--samples", samples, "Random samples for the phi law");
  auto* embed_cmd = app.add_subcommand("embed", "Image of (x, t^k) in F");
  embed_cmd->add_option("word", w1)->required();
  embed_cmd->add_option("--k", ks, "Exponents k1[,k2,...]")->required()->delimiter(',');
  embed_cmd->add_flag("--verify", verify, "Check closed form and quasi-isometry constants (n = 1)");
  embed_cmd->add_option("--max-radius", max_radius, "Search radius for --verify");
  auto* distort = app.add_subcommand("distort", "Sampled distortion function h(r)");
  distort->add_option("--subgroup", subgroup, "fxz, fxz^n:<n>, or comma-separated words");
  distort->add_option("--h-radius", h_radius, "Subgroup ball radius")->check(CLI::PositiveNumber);
  distort->add_option("--f-radius", f_radius, "F ball radius")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*nf) {
      print_nf(out, g, normalize(parse_word(w1)));
    } else if (*mul) {
      print_nf(out, g, multiply(normalize(parse_word(w1)), normalize(parse_word(w2))));
    } else if (*inv) {
      print_nf(out, g, invert(normalize(parse_word(w1))));
    } else if (*phi) {
      print_nf(out, g, shift(normalize(parse_word(w1)), shift_by));
    } else if (*plmap) {
      PLMap f = from_word(parse_word(w1));
      if (g.json) {
        out << to_json(f).dump() << '\n';
      } else {
        out << "tail," << f.tail() << "\na,b\n";
        for (const Breakpoint& n : f.nodes()) {
          out << n.a.to_string() << ',' << n.b.to_string() << '\n';
        }
      }
    } else if (*bounds) {
      NormalForm a = normalize(parse_word(w1));
      NormBounds b = norm_bounds(a);
      Word rewritten = rewrite_to_finite_gens(a);
      if (g.json) {
        Json j = to_json(b);
        j["d"] = d_statistic(a);
        j["normal_form"] = to_json(a);
        j["rewrite"] = format_word(rewritten);
        j["rewrite_length"] = rewritten.size();
        out << j.dump() << '\n';
      } else {
        out << "normal_form " << to_string(a) << '\n'
            << "d " << d_statistic(a) << '\n'
            << "lemma1_lb " << b.lemma1_lb << '\n'
            << "prop2_lb " << to_string(b.prop2_lb) << '\n'
            << "prop2_ub " << b.prop2_ub << '\n'
            << "rewrite " << format_word(rewritten) << '\n'
            << "rewrite_length " << rewritten.size() << '\n';
      }
    } else if (*norm) {
      auto n = exact_norm(from_word(parse_word(w1)), max_radius, g.ball());
      if (g.json) {
        Json j = {{"norm", n ? Json(*n) : Json(nullptr)}, {"max_radius", max_radius}};
        out << j.dump() << '\n';
      } else if (n) {
        out << *n << '\n';
      } else {
        out << '>' << max_radius << '\n';
      }
    } else if (*ball) {
      BallStats s = ball_sizes(radius, g.ball());
      if (g.json) {
        out << to_json(s).dump() << '\n';
      } else {
        out << "r size\n";
        for (std::size_t r = 0; r < s.sphere_sizes.size(); ++r) {
          out << r << ' ' << s.sphere_sizes[r] << '\n';
        }
        out << "total " << s.total << '\n';
      }
    } else if (*check) {
      PresentationCheckOptions opts;
      opts.max_index = max_index;
      opts.phi_samples = samples;
      opts.seed = g.seed;
      PresentationReport r = check_presentation(opts);
      if (g.json) {
        Json j = to_json(r);
        j["seed"] = g.seed;
        out << j.dump() << '\n';
      } else if (r.passed) {
        out << "all relators trivial (" << r.checks << " checks, seed " << g.seed << ")\n";
      } else {
        print_failures(out, r.failures);
      }
      return r.passed ? kOk : kVerificationFailed;
    } else if (*embed_cmd) {
      NormalForm x = normalize(parse_word(w1));
      NormalForm image = ks.size() == 1 ? embed(x, ks[0]) : embed_n(x, ks);
      if (!verify) {
        print_nf(out, g, image);
        return kOk;
      }
      if (ks.size() != 1) {
        err << "error: --verify applies to a single exponent\n";
        return kError;
      }
      FxZnElement sample{x, ks};
      QIReport r = qi_check(std::span<const FxZnElement>(&sample, 1), max_radius, g.ball());
      if (g.json) {
        out << to_json(r).dump() << '\n';
      } else {
        const QISampleResult& s = r.samples.front();
        auto show = [](const auto& v) {
          std::ostringstream os;
          os << std::boolalpha;
          if (v) {
            os << *v;
          } else {
            os << "n/a";
          }
          return os.str();
        };
        out << to_string(image) << '\n'
            << "closed_form_ok " << show(s.closed_form_ok) << '\n'
            << "d_identity_ok " << show(s.d_identity_ok) << '\n'
            << "source_norm " << show(s.source_norm) << '\n'
            << "image_norm " << show(s.image_norm) << '\n'
            << "inequalities_ok " << std::boolalpha << s.inequalities_ok << '\n'
            << (s.passed ? "PASS" : "FAIL") << (s.note.empty() ? "" : " (" + s.note + ")")
            << '\n';
      }
      return r.passed ? kOk : kVerificationFailed;
    } else if (*distort) {
      SubgroupSpec spec = parse_subgroup_spec(subgroup);
      DistortionOptions opts;
      opts.ball = g.ball();
      opts.generator_set = spec.name;
      opts.envelope_applies = spec.envelope_applies;
      DistortionReport r = h_distortion(spec.generators, h_radius, f_radius, opts);
      if (g.json) {
        out << to_json(r).dump() << '\n';
      } else {
        out << "# subgroup " << r.generator_set << ", |.|_H <= " << r.h_radius
            << ", |.|_F <= " << r.f_radius << "; h(r) values are sampled lower bounds\n";
        out << "r h(r) witness\n";
        for (const HValue& v : r.h_values) {
          out << v.r << ' ' << to_string(v.value) << ' '
              << (!v.witness ? std::string("-")
                           : v.witness->is_identity() ? std::string("id")
                                                      : to_string(*v.witness))
              << (v.within_envelope ? "" : " ABOVE-ENVELOPE") << '\n';
        }
        out << "beyond_radius " << r.beyond_radius << '\n';
        if (r.envelope_applies) {
          out << "envelope 18+48/r " << (r.envelope_holds ? "holds" : "VIOLATED") << '\n';
        }
      }
      return r.envelope_applies && !r.envelope_holds ? kVerificationFailed : kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}

}  // namespace thompson::cli
