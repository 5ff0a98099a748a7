#include "thompson/metrics.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace thompson {

NormBounds prop2_bounds(const NormalForm& a) {
  const std::int64_t d = d_statistic(a);
  NormBounds out;
  out.prop2_lb = Rational(d, 6) - 2;
  out.prop2_ub = 3 * d;
  return out;
}

NormBounds norm_bounds(const NormalForm& a) {
  NormBounds out = prop2_bounds(a);
  out.lemma1_lb = lemma1_lower_bound(from_word(to_word(a)));
  return out;
}

std::int64_t lemma1_lower_bound(const PLMap& f) {
  if (f.is_identity()) return 0;
  BigInt best = 1;
  for (const Breakpoint& n : breaking_points(f)) {
    best = std::max(best, (n.a - 2).ceil());
    best = std::max(best, (n.b - 2).ceil());
  }
  return best.convert_to<std::int64_t>();
}

Word rewrite_to_finite_gens(const NormalForm& a) {
  std::vector<Letter> out;
  for (Letter l : to_word(a)) {
    if (l.index <= 1) {
      out.push_back(l);
      continue;
    }
    const auto conj = static_cast<std::size_t>(l.index - 1);
    out.insert(out.end(), conj, gen_inv(0));
    out.push_back({1, l.sign});
    out.insert(out.end(), conj, gen(0));
  }
  return free_reduce(Word(std::move(out)));
}

const std::vector<PLMap>& finite_generator_maps() {
  static const std::vector<PLMap> maps = [] {
    std::vector<PLMap> m;
    for (Letter l : finite_generator_letters()) m.push_back(from_word(Word{l}));
    return m;
  }();
  return maps;
}

const std::vector<Letter>& finite_generator_letters() {
  static const std::vector<Letter> letters{gen(0), gen_inv(0), gen(1), gen_inv(1)};
  return letters;
}

// Grows a CayleyBall one sphere at a time. Workers expand contiguous chunks
// of the frontier against a read-only index; the chunks are then merged in
// order, so the numbering never depends on scheduling.
class CayleyBallBuilder {
 public:
  CayleyBallBuilder(std::vector<PLMap> generators, const BallOptions& options)
      : options_(options) {
    if (generators.size() > 255) {
      throw std::invalid_argument("at most 255 generators supported");
    }
    ball_.generators_ = std::move(generators);
    ball_.track_parents_ = options.track_parents;
    PLMap id;
    ball_.insert(id.key(), 0, -1, -1);
    ball_.spheres_.push_back(1);
    frontier_.push_back(std::move(id));
    frontier_ids_.push_back(0);
  }

  CayleyBall& ball() { return ball_; }

  // Adds the next sphere; returns false if it is empty.
  bool grow() {
    struct Candidate {
      std::string key;
      PLMap map;
      std::uint32_t parent;
      std::uint8_t via;
    };
    const auto& gens = ball_.generators_;
    const unsigned workers = std::max(1u, options_.workers);
    const std::size_t n = frontier_.size();
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::vector<Candidate>> found(workers);

    auto expand = [&](unsigned w) {
      const std::size_t lo = std::min(n, w * chunk);
      const std::size_t hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          PLMap next = compose(frontier_[i], gens[g]);
          std::string key = next.key();
          if (ball_.index_.contains(key)) continue;
          found[w].push_back({std::move(key), std::move(next), frontier_ids_[i],
                              static_cast<std::uint8_t>(g)});
        }
      }
    };
    if (workers == 1) {
      expand(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(expand, w);
    }

    const int d = ball_.radius_ + 1;
    std::vector<PLMap> next_frontier;
    std::vector<std::uint32_t> next_ids;
    for (auto& part : found) {
      for (Candidate& c : part) {
        if (ball_.index_.contains(c.key)) continue;
        if (ball_.size() >= options_.cap_states) {
          throw ResourceLimitError("Cayley ball exceeds state cap of " +
                                   std::to_string(options_.cap_states));
        }
        next_ids.push_back(static_cast<std::uint32_t>(ball_.size()));
        ball_.insert(std::move(c.key), d, c.parent, c.via);
        next_frontier.push_back(std::move(c.map));
      }
      part.clear();
      part.shrink_to_fit();
    }
    ball_.radius_ = d;
    ball_.spheres_.push_back(next_frontier.size());
    frontier_ = std::move(next_frontier);
    frontier_ids_ = std::move(next_ids);
    return !frontier_.empty();
  }

 private:
  BallOptions options_;
  CayleyBall ball_;
  std::vector<PLMap> frontier_;
  std::vector<std::uint32_t> frontier_ids_;
};

void CayleyBall::insert(std::string key, int distance, std::int64_t parent, int via) {
  keys_.push_back(std::move(key));
  index_.emplace(keys_.back(), static_cast<std::uint32_t>(keys_.size() - 1));
  dist_.push_back(static_cast<std::uint16_t>(distance));
  if (track_parents_) {
    parent_.push_back(parent);
    via_.push_back(static_cast<std::uint8_t>(via));
  }
}

CayleyBall CayleyBall::build(std::vector<PLMap> generators, int radius,
                             const BallOptions& options) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  if (radius > 65535) throw std::invalid_argument("radius too large");
  CayleyBallBuilder builder(std::move(generators), options);
  while (builder.ball().radius() < radius) builder.grow();
  return std::move(builder.ball());
}

CayleyBall CayleyBall::build_f(int radius, const BallOptions& options) {
  return build(finite_generator_maps(), radius, options);
}

std::optional<int> CayleyBall::distance_of_key(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return dist_[it->second];
}

std::optional<int> CayleyBall::distance(const PLMap& f) const {
  return distance_of_key(f.key());
}

std::optional<std::size_t> CayleyBall::find(const PLMap& f) const {
  auto it = index_.find(f.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CayleyBall::geodesic(std::size_t i) const {
  if (!track_parents_) {
    throw std::logic_error("geodesics require a ball built with track_parents");
  }
  std::vector<std::size_t> path;
  for (std::int64_t at = static_cast<std::int64_t>(i); parent_[at] >= 0;
       at = parent_[at]) {
    path.push_back(via_[at]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Word geodesic_word(const CayleyBall& ball, std::size_t i) {
  const auto& letters = finite_generator_letters();
  std::vector<Letter> out;
  for (std::size_t g : ball.geodesic(i)) out.push_back(letters.at(g));
  return Word(std::move(out));
}

std::optional<int> exact_norm(const PLMap& f, int max_radius,
                              const BallOptions& options) {
  if (f.is_identity()) return 0;
  const std::string target = f.key();
  BallOptions opts = options;
  opts.track_parents = false;
  CayleyBallBuilder builder(finite_generator_maps(), opts);
  while (builder.ball().radius() < max_radius) {
    bool more = builder.grow();
    if (auto d = builder.ball().distance_of_key(target)) return d;
    if (!more) break;
  }
  return std::nullopt;
}

BallStats ball_sizes(int radius, const BallOptions& options) {
  BallOptions opts = options;
  opts.track_parents = false;
  CayleyBall ball = CayleyBall::build_f(radius, opts);
  BallStats s;
  s.radius = radius;
  s.sphere_sizes = ball.sphere_sizes();
  s.total = ball.size();
  return s;
}

std::vector<Word> finite_relators() {
  const Word a = parse_word("x0 x1^-1");
  const Word b1 = parse_word("x0^-1 x1 x0");
  const Word b2 = parse_word("x0^-2 x1 x0^2");
  auto comm = [](const Word& u, const Word& v) {
    return invert_word(u) * invert_word(v) * u * v;
  };
  return {comm(a, b1), comm(a, b2)};
}

PresentationReport check_presentation(const PresentationCheckOptions& options) {
  if (options.max_index < 2) throw std::invalid_argument("max_index must be >= 2");
  PresentationReport report;
  auto expect_identity = [&](const Word& w, std::string what) {
    ++report.checks;
    if (!from_word(w, options.generators).is_identity()) {
      report.passed = false;
      report.failures.push_back({std::move(what), w});
    }
  };

  for (const Word& r : finite_relators()) {
    expect_identity(r, "finite relator");
  }
  for (Index j = 1; j <= options.max_index; ++j) {
    for (Index i = 0; i < j; ++i) {
      Word rel{gen_inv(i), gen(j), gen(i), gen_inv(j + 1)};
      expect_identity(rel, "x_" + std::to_string(i) + "^-1 x_" + std::to_string(j) +
                               " x_" + std::to_string(i) + " = x_" +
                               std::to_string(j + 1));
    }
  }

  std::mt19937_64 rng(options.seed);
  const NormalForm x0 = normalize(Word{gen(0)});
  for (std::size_t s = 0; s < options.phi_samples; ++s) {
    Word w = random_word(rng, options.sample_length, options.sample_max_index);
    NormalForm a = normalize(w);
    NormalForm twice = shift(a, 2);
    NormalForm once = shift(a, 1);
    Word lhs = to_word(twice);
    Word rhs = Word{gen_inv(0)} * to_word(once) * Word{gen(0)};
    expect_identity(lhs * invert_word(rhs), "phi^2(x) = x_0^-1 phi(x) x_0 for x = " +
                                                format_word(w));
    ++report.checks;
    if (twice != multiply(multiply(invert(x0), once), x0)) {
      report.passed = false;
      report.failures.push_back({"normal-form phi law", w});
    }
  }
  return report;
}

}  // namespace thompson
