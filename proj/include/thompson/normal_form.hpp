#pragma once

// Unique normal form of elements of F over the infinite generating set:
//
//   x_{i_1}^{r_1} ... x_{i_n}^{r_n} x_{j_m}^{-s_m} ... x_{j_1}^{-s_1}
//
// with positive exponents, i_1 < ... < i_n, j_1 < ... < j_m, i_n != j_m, and
// whenever x_i and x_i^{-1} both occur, x_{i+1} or x_{i+1}^{-1} occurs too.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thompson/words.hpp"

namespace thompson {

struct Term {
  Index index = 0;
  std::int64_t exponent = 1;
  friend bool operator==(const Term&, const Term&) = default;
};

class NormalForm {
 public:
  // The identity.
  NormalForm() = default;

  // Both blocks are given in ascending index order; the negative block
  // (j_1, s_1), ..., (j_m, s_m) is emitted right-to-left by to_word.
  // Throws std::invalid_argument if any normal-form condition fails.
  static NormalForm from_blocks(std::vector<Term> positive,
                                std::vector<Term> negative);
  static std::optional<NormalForm> try_from_blocks(std::vector<Term> positive,
                                                   std::vector<Term> negative);

  const std::vector<Term>& positive() const noexcept { return positive_; }
  const std::vector<Term>& negative() const noexcept { return negative_; }

  bool is_identity() const noexcept {
    return positive_.empty() && negative_.empty();
  }

  // Sum of all exponents, i.e. the length of to_word().
  std::int64_t exponent_sum() const noexcept;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend NormalForm invert(const NormalForm& a);
  friend NormalForm shift(const NormalForm& a, Index k);
  friend class NormalFormBuilder;

  std::vector<Term> positive_;
  std::vector<Term> negative_;
};

// Why a pair of blocks is not in normal form, or nullopt if it is.
std::optional<std::string> normal_form_violation(const std::vector<Term>& positive,
                                                 const std::vector<Term>& negative);

NormalForm normalize(const Word& w);
NormalForm multiply(const NormalForm& a, const NormalForm& b);
NormalForm invert(const NormalForm& a);
NormalForm power(const NormalForm& a, std::int64_t n);

// The shift endomorphism x_i -> x_{i+k}, k >= 0.
NormalForm shift(const NormalForm& a, Index k);

// D = sum of exponents + i_n + j_m, an empty block contributing 0.
std::int64_t d_statistic(const NormalForm& a);

Word to_word(const NormalForm& a);

inline std::string to_string(const NormalForm& a) { return format_word(to_word(a)); }

}  // namespace thompson
