#pragma once

// F as a group of piecewise-linear homeomorphisms of the real line.
//
// The generator f_k is the identity for t <= k, has slope 2 on [k, k+1] and
// is translation by +1 for t >= k+1. Composition follows the right action:
// the word x_i x_j is the map "apply f_i, then f_j".

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/words.hpp"

namespace thompson {

struct Breakpoint {
  Dyadic a;  // domain coordinate
  Dyadic b;  // image coordinate, b = f(a)
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

struct Derivatives {
  int left_log2 = 0;
  int right_log2 = 0;
  Dyadic left() const { return pow2(left_log2); }
  Dyadic right() const { return pow2(right_log2); }
  bool is_break() const noexcept { return left_log2 != right_log2; }
};

struct Interval {
  Dyadic lo;
  Dyadic hi;
};

class UnboundedSupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical piecewise-linear map: identity on (-inf, first node], slope 1 and
// offset tail() past the last node, power-of-two slopes in between. Only
// genuine slope changes are stored, so structural equality is group equality.
class PLMap {
 public:
  // The identity map.
  PLMap() : slopes_{0} {}

  // Validating constructor; throws std::invalid_argument unless the node list
  // describes a canonical map of the model.
  static PLMap from_nodes(std::vector<Breakpoint> nodes, std::int64_t tail);

  // Decodes key(); throws std::invalid_argument on malformed input.
  static PLMap from_key(std::string_view key);

  const std::vector<Breakpoint>& nodes() const noexcept { return nodes_; }
  std::int64_t tail() const noexcept { return tail_; }
  bool is_identity() const noexcept { return nodes_.empty() && tail_ == 0; }

  // log2 of the slope on piece p, where piece 0 lies left of the first node
  // and piece nodes().size() lies right of the last one.
  int slope_log2(std::size_t piece) const { return slopes_[piece]; }

  Dyadic evaluate(const Dyadic& t) const;
  Derivatives derivatives(const Dyadic& a) const;

  // Canonical binary serialization: tail, then each node's coordinates as
  // (m, e) pairs. Equal maps have equal keys.
  std::string key() const;

  friend bool operator==(const PLMap& f, const PLMap& g) {
    return f.tail_ == g.tail_ && f.nodes_ == g.nodes_;
  }

 private:
  friend PLMap compose(const PLMap& f, const PLMap& g);
  friend PLMap invert(const PLMap& f);
  friend PLMap generator(Index k);

  std::vector<Breakpoint> nodes_;
  std::vector<int> slopes_;  // size nodes_.size() + 1, ends are 0
  std::int64_t tail_ = 0;
};

// The generator f_k, k >= 0.
PLMap generator(Index k);

// t -> g(f(t)): apply f first, then g.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);

inline bool equals(const PLMap& f, const PLMap& g) { return f == g; }
inline Dyadic evaluate(const PLMap& f, const Dyadic& t) { return f.evaluate(t); }
inline Derivatives derivatives(const PLMap& f, const Dyadic& a) {
  return f.derivatives(a);
}

// The points where the one-sided slopes differ. By canonicity these are
// exactly the stored nodes.
inline const std::vector<Breakpoint>& breaking_points(const PLMap& f) {
  return f.nodes();
}

inline std::int64_t eventual_translation(const PLMap& f) { return f.tail(); }

// Smallest closed interval outside which f is the identity; nullopt for the
// identity. Throws UnboundedSupportError when f is a translation near +inf.
std::optional<Interval> support(const PLMap& f);

// Maps a generator index to its PL map. Replaceable so that verification
// code can be exercised against corrupted generators.
using GeneratorFn = std::function<PLMap(Index)>;

PLMap from_word(const Word& w);
PLMap from_word(const Word& w, const GeneratorFn& generators);

// Commutator [f, g] = f^-1 g^-1 f g in the right-action convention.
PLMap commutator(const PLMap& f, const PLMap& g);

}  // namespace thompson
