#pragma once

// Words over the infinite generating set {x_0, x_1, x_2, ...} of F.

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

using Index = std::int64_t;

// Largest generator index accepted by the parser.
inline constexpr Index kMaxParsedIndex = 2147483647;

struct Letter {
  Index index = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept { return {index, -sign}; }
  constexpr bool is_inverse_of(Letter other) const noexcept {
    return index == other.index && sign == -other.sign;
  }
  friend constexpr bool operator==(Letter, Letter) = default;
};

constexpr Letter gen(Index k) noexcept { return {k, 1}; }
constexpr Letter gen_inv(Index k) noexcept { return {k, -1}; }

// Immutable sequence of letters in left-to-right multiplication order.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Concatenation (group product of the represented elements).
  Word operator*(const Word& rhs) const;

  // Largest index occurring, or -1 for the empty word.
  Index max_index() const noexcept;

  // Number of positive letters minus number of negative letters.
  std::int64_t signed_length() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Grammar: word := term (WS+ term)* | empty;  term := "x" index ("^" exponent)?
// where exponent is an optional "-" followed by digits with nonzero value.
Word parse_word(std::string_view text);

// Inverse of parse_word. Runs of equal letters are collected into exponents.
std::string format_word(const Word& w);

Word free_reduce(const Word& w);
Word invert_word(const Word& w);

// Letter-by-letter power w^n (n may be negative).
Word power(const Word& w, std::int64_t n);

// Uniform random word of length in [0, max_length] with indices in [0, max_index].
Word random_word(std::mt19937_64& rng, std::size_t max_length, Index max_index);

}  // namespace thompson
