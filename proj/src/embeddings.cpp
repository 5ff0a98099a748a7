#include "thompson/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace thompson {

namespace {

// x_{2i} x_{2i+1}^{-1}, already in normal form.
NormalForm t_image(Index i) {
  return NormalForm::from_blocks({{2 * i, 1}}, {{2 * i + 1, 1}});
}

PLMap map_of(const NormalForm& a) { return from_word(to_word(a)); }

std::int64_t ceil_nonneg(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return std::max<std::int64_t>(0, q);
}

}  // namespace

NormalForm embed(const NormalForm& x, std::int64_t k) {
  if (k < 0) return invert(embed(invert(x), -k));
  return multiply(power(t_image(0), k), shift(x, 2));
}

NormalForm embed_n(const NormalForm& x, std::span<const std::int64_t> k) {
  if (k.empty()) throw std::invalid_argument("embed_n needs n >= 1 exponents");
  NormalForm acc;
  for (std::size_t i = 0; i < k.size(); ++i) {
    acc = multiply(acc, power(t_image(static_cast<Index>(i)), k[i]));
  }
  return multiply(acc, shift(x, 2 * static_cast<Index>(k.size())));
}

std::optional<NormalForm> closed_form_embed(const NormalForm& x, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("closed form requires k >= 0");
  std::vector<Term> pos;
  std::vector<Term> neg;
  if (k > 0) pos.push_back({0, k});
  for (const Term& t : x.positive()) pos.push_back({t.index + k + 2, t.exponent});
  for (Index j = 1; j <= k; ++j) neg.push_back({j, 1});
  for (const Term& t : x.negative()) neg.push_back({t.index + k + 2, t.exponent});
  return NormalForm::try_from_blocks(std::move(pos), std::move(neg));
}

std::vector<Word> fxzn_generator_words(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Word> out;
  for (Index i = 0; i < n; ++i) out.push_back(Word{gen(2 * i), gen_inv(2 * i + 1)});
  out.push_back(Word{gen(2 * Index{n})});
  out.push_back(Word{gen(2 * Index{n} + 1)});
  return out;
}

std::vector<NormalForm> fxzn_generators(int n) {
  std::vector<NormalForm> out;
  for (const Word& w : fxzn_generator_words(n)) out.push_back(normalize(w));
  return out;
}

SubgroupRelationsReport verify_subgroup_relations(const SubgroupRelationsOptions& options) {
  SubgroupRelationsReport report;
  auto expect_commute = [&](const Word& u, const Word& v) {
    ++report.checks;
    if (!commutator(from_word(u), from_word(v)).is_identity()) {
      report.passed = false;
      Word witness = invert_word(u) * invert_word(v) * u * v;
      report.failures.push_back({"[" + format_word(u) + ", " + format_word(v) +
                                     "] is not trivial",
                                 witness});
    }
  };

  const auto& fxz = options.fxz_generators;
  for (std::size_t i = 1; i < fxz.size(); ++i) expect_commute(fxz[0], fxz[i]);

  for (Index k = 0; k <= options.max_k; ++k) {
    Word wk{gen(2 * k), gen_inv(2 * k + 1)};
    ++report.checks;
    PLMap mk = from_word(wk);
    bool inside = false;
    if (mk.tail() == 0) {
      auto s = support(mk);
      inside = !s || (s->lo >= Dyadic(2 * k) && s->hi <= Dyadic(2 * k + 2));
    }
    if (!inside) {
      report.passed = false;
      report.failures.push_back({"support not within [" + std::to_string(2 * k) + ", " +
                                     std::to_string(2 * k + 2) + "]",
                                 wk});
    }
    for (Index l = k + 1; l <= options.max_k; ++l) {
      expect_commute(wk, Word{gen(2 * l), gen_inv(2 * l + 1)});
    }
  }

  // The n abelian generators commute with each other and with x_{2n}, x_{2n+1}.
  const auto gens = fxzn_generator_words(options.n);
  const auto n = static_cast<std::size_t>(options.n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) expect_commute(gens[a], gens[b]);
  }
  return report;
}

QIReport qi_check(std::span<const FxZnElement> samples, const CayleyBall& f_ball) {
  QIReport report;
  const Rational K = report.witness.K;
  const Rational C = report.witness.C;
  const Rational lower_offset{2};
  for (const FxZnElement& s : samples) {
    if (s.k.size() != 1) {
      throw std::invalid_argument("qi_check expects F x Z samples (n = 1)");
    }
    const std::int64_t k = s.k[0];
    QISampleResult r;
    r.sample = s;
    r.image = embed(s.x, k);
    bool ok = true;
    if (k >= 0) {
      auto closed = closed_form_embed(s.x, k);
      r.closed_form_ok = closed && *closed == r.image;
      ok = ok && *r.closed_form_ok;
    }
    if (k >= 1 && !s.x.positive().empty() && !s.x.negative().empty()) {
      r.d_identity_ok = d_statistic(r.image) == d_statistic(s.x) + 4 * k + 4;
      ok = ok && *r.d_identity_ok;
    }

    r.source_norm = f_ball.distance(map_of(s.x));
    r.image_norm = f_ball.distance(map_of(r.image));
    r.exact = r.source_norm && r.image_norm;

    const NormBounds bx = prop2_bounds(s.x);
    const NormBounds bi = prop2_bounds(r.image);
    auto within = [](const std::optional<int>& norm, const NormBounds& b) {
      return !norm || (Rational(*norm) >= b.prop2_lb && *norm <= b.prop2_ub);
    };
    if (!within(r.source_norm, bx) || !within(r.image_norm, bi)) {
      ok = false;
      r.note = "exact norm outside the D sandwich; ";
    }

    const std::int64_t abs_k = k < 0 ? -k : k;
    const std::int64_t src_lo =
        abs_k + (r.source_norm ? *r.source_norm : ceil_nonneg(bx.prop2_lb));
    const std::int64_t src_hi = abs_k + (r.source_norm ? *r.source_norm : bx.prop2_ub);
    const std::int64_t img_lo = r.image_norm ? *r.image_norm : ceil_nonneg(bi.prop2_lb);
    const std::int64_t img_hi = r.image_norm ? *r.image_norm : bi.prop2_ub;
    r.inequalities_ok = Rational(src_hi) / K - lower_offset <= Rational(img_lo) &&
                        Rational(img_hi) <= K * src_lo + C;
    ok = ok && r.inequalities_ok;
    if (!r.exact) r.note += "checked with D-based bounds";
    r.passed = ok;
    report.passed = report.passed && ok;
    report.samples.push_back(std::move(r));
  }
  return report;
}

QIReport qi_check(std::span<const FxZnElement> samples, int max_bfs_radius,
                  const BallOptions& options) {
  return qi_check(samples, CayleyBall::build_f(max_bfs_radius, options));
}

std::vector<FxZBallEntry> fxz_subgroup_ball(int h_radius, const BallOptions& options) {
  const auto gens = fxzn_generators(1);
  std::vector<PLMap> maps;
  // Preimage of each generator in F x Z, in the same order.
  std::vector<FxZnElement> pre;
  const NormalForm x0 = normalize(Word{gen(0)});
  const NormalForm x1 = normalize(Word{gen(1)});
  const NormalForm id;
  const FxZnElement gen_pre[] = {{id, {1}}, {x0, {0}}, {x1, {0}}};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    PLMap m = map_of(gens[g]);
    maps.push_back(m);
    maps.push_back(invert(m));
    pre.push_back(gen_pre[g]);
    pre.push_back({invert(gen_pre[g].x), {-gen_pre[g].k[0]}});
  }
  BallOptions opts = options;
  opts.track_parents = true;
  CayleyBall ball = CayleyBall::build(std::move(maps), h_radius, opts);
  std::vector<FxZBallEntry> out;
  out.reserve(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    FxZnElement e{NormalForm{}, {0}};
    for (std::size_t g : ball.geodesic(i)) {
      e.x = multiply(e.x, pre[g].x);
      e.k[0] += pre[g].k[0];
    }
    NormalForm image = embed(e.x, e.k[0]);
    out.push_back({std::move(e), std::move(image), ball.distance(i)});
  }
  return out;
}

DistortionReport h_distortion(std::span<const NormalForm> generators, int h_radius,
                              const CayleyBall& f_ball,
                              const DistortionOptions& options) {
  if (h_radius < 1 || f_ball.radius() < 1) {
    throw std::invalid_argument("radii must be >= 1");
  }
  if (generators.empty()) throw std::invalid_argument("no subgroup generators");
  DistortionReport report;
  report.generator_set = options.generator_set;
  report.h_radius = h_radius;
  report.f_radius = f_ball.radius();
  report.envelope_applies = options.envelope_applies;

  std::vector<PLMap> maps;
  std::vector<NormalForm> nfs;
  for (const NormalForm& g : generators) {
    PLMap m = map_of(g);
    maps.push_back(m);
    maps.push_back(invert(m));
    nfs.push_back(g);
    nfs.push_back(invert(g));
  }
  BallOptions opts = options.ball;
  opts.track_parents = true;
  CayleyBall h_ball = CayleyBall::build(std::move(maps), h_radius, opts);

  for (std::size_t i = 0; i < h_ball.size(); ++i) {
    NormalForm e;
    for (std::size_t g : h_ball.geodesic(i)) e = multiply(e, nfs[g]);
    DistortionSample s{std::move(e), h_ball.distance(i), f_ball.distance_of_key(h_ball.key(i))};
    if (!s.g_norm) ++report.beyond_radius;
    report.samples.push_back(std::move(s));
  }

  for (int r = 1; r <= f_ball.radius(); ++r) {
    HValue hv;
    hv.r = r;
    for (const DistortionSample& s : report.samples) {
      if (s.g_norm && *s.g_norm <= r && (!hv.witness || s.h_norm > hv.max_h_norm)) {
        hv.max_h_norm = s.h_norm;
        hv.witness = s.element;
      }
    }
    hv.value = Rational(hv.max_h_norm, r);
    hv.within_envelope = hv.max_h_norm <= 18 * std::int64_t{r} + 48;
    report.envelope_holds = report.envelope_holds && hv.within_envelope;
    report.h_values.push_back(std::move(hv));
  }
  return report;
}

DistortionReport h_distortion(std::span<const NormalForm> generators, int h_radius,
                              int f_radius, const DistortionOptions& options) {
  BallOptions opts = options.ball;
  opts.track_parents = false;
  return h_distortion(generators, h_radius, CayleyBall::build_f(f_radius, opts), options);
}

SubgroupSpec parse_subgroup_spec(std::string_view spec) {
  SubgroupSpec out;
  if (spec == "fxz") {
    out.name = "fxz";
    out.generators = fxzn_generators(1);
    out.envelope_applies = true;
    return out;
  }
  constexpr std::string_view prefix = "fxz^n:";
  if (spec.starts_with(prefix)) {
    std::string_view digits = spec.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) {
      throw std::invalid_argument("bad subgroup spec: " + std::string(spec));
    }
    out.name = std::string(spec);
    out.generators = fxzn_generators(n);
    out.envelope_applies = n == 1;
    return out;
  }
  out.name = "explicit";
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    Word w = parse_word(spec.substr(start, comma - start));
    if (w.empty()) throw std::invalid_argument("empty subgroup generator");
    out.generators.push_back(normalize(w));
    start = comma + 1;
  }
  return out;
}

}  // namespace thompson
