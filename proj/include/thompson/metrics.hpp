#pragma once

// Word metric of F with respect to the generators {x_0, x_1}.

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "thompson/normal_form.hpp"
#include "thompson/plmap.hpp"
#include "thompson/words.hpp"

namespace thompson {

using Rational = boost::rational<std::int64_t>;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormBounds {
  std::int64_t lemma1_lb = 0;
  Rational prop2_lb{0};  // D/6 - 2
  std::int64_t prop2_ub = 0;  // 3D
};

// The D-based fields only; lemma1_lb is left at 0.
NormBounds prop2_bounds(const NormalForm& a);

// All three bounds.
NormBounds norm_bounds(const NormalForm& a);

// ceil(max over breaking points (a, b) of max{1, a-2, b-2}); 0 for the identity.
std::int64_t lemma1_lower_bound(const PLMap& f);

// Rewrites each x_i (i >= 2) as x_0^{-(i-1)} x_1 x_0^{i-1} and free-reduces.
Word rewrite_to_finite_gens(const NormalForm& a);

// The four maps f_0, f_0^{-1}, f_1, f_1^{-1} and their letters.
const std::vector<PLMap>& finite_generator_maps();
const std::vector<Letter>& finite_generator_letters();

struct BallOptions {
  std::size_t cap_states = 10'000'000;
  unsigned workers = 1;
  // Keep one parent link per element so a geodesic can be reconstructed.
  bool track_parents = false;
};

// Ball of the Cayley graph of the group generated by `generators` (a
// symmetric set of PL maps), expanded frontier by frontier from the identity
// with canonical map keys for deduplication. Elements are numbered in BFS
// order; the numbering is independent of the worker count.
class CayleyBall {
 public:
  CayleyBall(CayleyBall&&) noexcept = default;
  CayleyBall& operator=(CayleyBall&&) noexcept = default;
  // The index holds views into keys_, so copies are not allowed.
  CayleyBall(const CayleyBall&) = delete;
  CayleyBall& operator=(const CayleyBall&) = delete;

  static CayleyBall build(std::vector<PLMap> generators, int radius,
                          const BallOptions& options = {});

  // The ball in F for the generators of finite_generator_maps().
  static CayleyBall build_f(int radius, const BallOptions& options = {});

  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return keys_.size(); }
  const std::vector<std::size_t>& sphere_sizes() const noexcept { return spheres_; }

  std::optional<int> distance(const PLMap& f) const;
  std::optional<int> distance_of_key(std::string_view key) const;

  std::string_view key(std::size_t i) const { return keys_[i]; }
  int distance(std::size_t i) const { return dist_[i]; }
  PLMap element(std::size_t i) const { return PLMap::from_key(keys_[i]); }
  std::optional<std::size_t> find(const PLMap& f) const;

  // Generator indices of one geodesic from the identity to element i.
  // Requires track_parents.
  std::vector<std::size_t> geodesic(std::size_t i) const;

  const std::vector<PLMap>& generators() const noexcept { return generators_; }

 private:
  friend class CayleyBallBuilder;
  CayleyBall() = default;
  void insert(std::string key, int distance, std::int64_t parent, int via);

  std::vector<PLMap> generators_;
  int radius_ = 0;
  bool track_parents_ = false;
  std::deque<std::string> keys_;
  std::unordered_map<std::string_view, std::uint32_t> index_;
  std::vector<std::uint16_t> dist_;
  std::vector<std::int64_t> parent_;
  std::vector<std::uint8_t> via_;
  std::vector<std::size_t> spheres_;
};

// Geodesic of element i of an F ball as a word in x_0, x_1.
Word geodesic_word(const CayleyBall& ball, std::size_t i);

// Exact norm if at most max_radius, nullopt otherwise. Throws
// ResourceLimitError if the search exceeds options.cap_states.
std::optional<int> exact_norm(const PLMap& f, int max_radius,
                              const BallOptions& options = {});

struct BallStats {
  int radius = 0;
  std::vector<std::size_t> sphere_sizes;
  std::size_t total = 0;
};

BallStats ball_sizes(int radius, const BallOptions& options = {});

struct CheckFailure {
  std::string what;
  Word witness;
};

struct PresentationCheckOptions {
  Index max_index = 8;
  std::size_t phi_samples = 200;
  std::size_t sample_length = 12;
  Index sample_max_index = 6;
  std::uint64_t seed = 1;
  GeneratorFn generators = generator;
};

struct PresentationReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;
};

// The two relators of the finite presentation as words.
std::vector<Word> finite_relators();

// Verifies the finite relators, x_i^{-1} x_j x_i = x_{j+1} for
// 0 <= i < j <= max_index, and phi^2(x) = x_0^{-1} phi(x) x_0 on random
// samples, all as PL-map identities.
PresentationReport check_presentation(const PresentationCheckOptions& options);

}  // namespace thompson
