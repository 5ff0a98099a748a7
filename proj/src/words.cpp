#include "thompson/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace thompson {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.index < 0 || (l.sign != 1 && l.sign != -1)) {
      throw std::invalid_argument("invalid letter in word");
    }
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(size() + rhs.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Index Word::max_index() const noexcept {
  Index m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

std::int64_t Word::signed_length() const noexcept {
  std::int64_t s = 0;
  for (const Letter& l : letters_) s += l.sign;
  return s;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": " + what),
      position_(position) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word run() {
    std::vector<Letter> out;
    skip_space();
    while (pos_ < text_.size()) {
      parse_term(out);
      if (pos_ < text_.size() && !is_space(text_[pos_])) {
        throw ParseError("expected whitespace between terms", pos_);
      }
      skip_space();
    }
    return Word(std::move(out));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  // Reads a run of decimal digits; throws if absent or larger than `limit`.
  std::int64_t digits(std::int64_t limit, const char* what) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || value > limit) {
      throw ParseError(std::string(what) + " out of range", start);
    }
    return value;
  }

  void parse_term(std::vector<Letter>& out) {
    if (text_[pos_] == '-') {
      throw ParseError("negative generator index", pos_);
    }
    if (text_[pos_] != 'x') throw ParseError("expected 'x'", pos_);
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      throw ParseError("negative generator index", pos_);
    }
    Index index = digits(kMaxParsedIndex, "generator index");
    std::int64_t exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      std::size_t exp_pos = pos_;
      // Exponent expands to |n| letters, so keep it within a sane bound.
      exponent = digits(1'000'000, "exponent");
      if (exponent == 0) throw ParseError("zero exponent", exp_pos);
      if (negative) exponent = -exponent;
    }
    Letter l{index, exponent > 0 ? 1 : -1};
    out.insert(out.end(), static_cast<std::size_t>(std::llabs(exponent)), l);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).run(); }

std::string format_word(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    std::int64_t run = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(ls[i].index);
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word invert_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? invert_word(w) : w;
  std::vector<Letter> out;
  std::int64_t times = n < 0 ? -n : n;
  out.reserve(base.size() * static_cast<std::size_t>(times));
  for (std::int64_t t = 0; t < times; ++t) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return Word(std::move(out));
}

Word random_word(std::mt19937_64& rng, std::size_t max_length, Index max_index) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_length);
  std::uniform_int_distribution<Index> idx_dist(0, max_index);
  std::bernoulli_distribution sign_dist(0.5);
  std::size_t len = len_dist(rng);
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back({idx_dist(rng), sign_dist(rng) ? 1 : -1});
  }
  return Word(std::move(out));
}

}  // namespace thompson
