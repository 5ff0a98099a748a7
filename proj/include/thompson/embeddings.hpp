#pragma once

// Quasi-isometrically embedded copies of F x Z^n inside F.
//
// Phi(x, t^k) = (x_0 x_1^{-1})^k phi^2(x) identifies F x Z with the subgroup
// generated by x_0 x_1^{-1}, x_2 and x_3. More generally
// (x, t_1^{k_1} ... t_n^{k_n}) maps to
// (x_0 x_1^{-1})^{k_1} ... (x_{2n-2} x_{2n-1}^{-1})^{k_n} phi^{2n}(x).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thompson/metrics.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/words.hpp"

namespace thompson {

struct FxZnElement {
  NormalForm x;
  std::vector<std::int64_t> k;  // n >= 1 exponents of t_1, ..., t_n
  friend bool operator==(const FxZnElement&, const FxZnElement&) = default;
};

NormalForm embed(const NormalForm& x, std::int64_t k);
NormalForm embed_n(const NormalForm& x, std::span<const std::int64_t> k);

// The closed form of Phi(x, t^k) for k >= 0:
//   x_0^k x_{i_1+k+2}^{r_1} ... x_{i_n+k+2}^{r_n}
//   x_{j_m+k+2}^{-s_m} ... x_{j_1+k+2}^{-s_1} x_k^{-1} ... x_1^{-1}
// built directly as blocks. nullopt if the blocks violate a normal-form
// condition.
std::optional<NormalForm> closed_form_embed(const NormalForm& x, std::int64_t k);

// Generators x_0x_1^{-1}, ..., x_{2n-2}x_{2n-1}^{-1}, x_{2n}, x_{2n+1}.
std::vector<Word> fxzn_generator_words(int n);
std::vector<NormalForm> fxzn_generators(int n);

struct SubgroupRelationsOptions {
  int n = 1;
  int max_k = 5;
  // Words for the F x Z generators; overridable for mutation testing.
  std::vector<Word> fxz_generators = fxzn_generator_words(1);
};

struct SubgroupRelationsReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;
};

SubgroupRelationsReport verify_subgroup_relations(const SubgroupRelationsOptions& options);

// Quasi-isometry constants: d/K - C <= d' <= K d + C.
struct QIWitness {
  Rational K{18};
  Rational C{48};
};

struct QISampleResult {
  FxZnElement sample;
  NormalForm image;
  // Closed-form agreement; nullopt when k < 0.
  std::optional<bool> closed_form_ok;
  // D(image) = D(x) + 4k + 4; evaluated only when x has both blocks and k >= 1.
  std::optional<bool> d_identity_ok;
  std::optional<int> source_norm;  // |x|_F when it resolved in the ball
  std::optional<int> image_norm;   // |Phi(x, t^k)|_F when it resolved
  bool exact = false;              // both norms exact
  bool inequalities_ok = false;
  bool passed = false;
  std::string note;
};

struct QIReport {
  QIWitness witness;
  std::vector<QISampleResult> samples;
  bool passed = true;
};

// Checks each F x Z sample (k of size 1) against the closed form, the D
// identity and the K = 18, C = 48 inequalities. Norms come from `f_ball`
// when they resolve there, otherwise from the D-based sandwich.
QIReport qi_check(std::span<const FxZnElement> samples, const CayleyBall& f_ball);
QIReport qi_check(std::span<const FxZnElement> samples, int max_bfs_radius,
                  const BallOptions& options = {});

// Ball of radius h_radius in the subgroup generated by x_0x_1^{-1}, x_2, x_3,
// with each element's preimage under Phi.
struct FxZBallEntry {
  FxZnElement preimage;
  NormalForm image;
  int h_norm = 0;
};
std::vector<FxZBallEntry> fxz_subgroup_ball(int h_radius, const BallOptions& options = {});

struct DistortionSample {
  NormalForm element;
  int h_norm = 0;
  std::optional<int> g_norm;  // nullopt: beyond the F-ball radius
};

struct HValue {
  int r = 0;
  std::int64_t max_h_norm = 0;
  Rational value{0};
  std::optional<NormalForm> witness;
  bool within_envelope = true;  // value <= 18 + 48/r
};

struct DistortionReport {
  std::string generator_set;
  int h_radius = 0;
  int f_radius = 0;
  std::vector<DistortionSample> samples;
  std::vector<HValue> h_values;
  std::size_t beyond_radius = 0;
  // Whether the 18 + 48/r envelope is implied for this generator set.
  bool envelope_applies = false;
  bool envelope_holds = true;
};

struct DistortionOptions {
  BallOptions ball;
  std::string generator_set = "explicit";
  bool envelope_applies = false;
};

// Sampled distortion h(r) = max{|x|_H : |x|_F <= r} / r for r = 1..f_radius,
// over the elements of the H-ball of radius h_radius. These are lower bounds
// for the true h(r).
DistortionReport h_distortion(std::span<const NormalForm> generators, int h_radius,
                              int f_radius, const DistortionOptions& options = {});
DistortionReport h_distortion(std::span<const NormalForm> generators, int h_radius,
                              const CayleyBall& f_ball,
                              const DistortionOptions& options = {});

// Parses "fxz", "fxz^n:<n>" or a comma-separated list of words.
struct SubgroupSpec {
  std::string name;
  std::vector<NormalForm> generators;
  bool envelope_applies = false;
};
SubgroupSpec parse_subgroup_spec(std::string_view spec);

}  // namespace thompson
