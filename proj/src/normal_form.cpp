#include "thompson/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace thompson {

namespace {

bool has_index(const std::vector<Term>& block, Index i) {
  auto it = std::lower_bound(block.begin(), block.end(), i,
                             [](const Term& t, Index v) { return t.index < v; });
  return it != block.end() && it->index == i;
}

std::vector<Term> group_runs(const std::vector<Index>& sorted) {
  std::vector<Term> out;
  for (Index i : sorted) {
    if (!out.empty() && out.back().index == i) {
      ++out.back().exponent;
    } else {
      out.push_back({i, 1});
    }
  }
  return out;
}

void expand_runs(const std::vector<Term>& block, std::vector<Index>& out) {
  for (const Term& t : block) out.insert(out.end(), t.exponent, t.index);
}

// Cancels x_i ... x_i^{-1} pairs whose interior avoids x_{i+1}^{±1}:
// x_i y x_i^{-1} = y with every index above i+1 lowered by one.
void reduce_extra_condition(std::vector<Term>& pos, std::vector<Term>& neg) {
  for (;;) {
    std::optional<Index> found;
    for (const Term& t : pos) {
      if (has_index(neg, t.index) && !has_index(pos, t.index + 1) &&
          !has_index(neg, t.index + 1)) {
        found = t.index;
        break;
      }
    }
    if (!found) return;
    const Index i = *found;
    for (auto* block : {&pos, &neg}) {
      for (Term& t : *block) {
        if (t.index == i) --t.exponent;
        if (t.index > i + 1) --t.index;
      }
      std::erase_if(*block, [](const Term& t) { return t.exponent == 0; });
    }
  }
}

}  // namespace

// Element kept as P N^{-1}: both blocks sorted multisets of indices, with the
// negative block stored ascending (x_{j_1}^{-1} is the rightmost letter).
class NormalFormBuilder {
 public:
  NormalFormBuilder() = default;
  explicit NormalFormBuilder(const NormalForm& a) {
    expand_runs(a.positive_, pos_);
    expand_runs(a.negative_, neg_);
  }

  void multiply(Letter l) {
    if (l.sign > 0) {
      push_positive(l.index);
    } else {
      push_negative(l.index);
    }
  }

  NormalForm finish() && {
    NormalForm nf;
    nf.positive_ = group_runs(pos_);
    nf.negative_ = group_runs(neg_);
    reduce_extra_condition(nf.positive_, nf.negative_);
    return nf;
  }

 private:
  // Moves x_k left through the negative block using
  //   x_j^{-1} x_k = x_{k+1} x_j^{-1}  (j < k)
  //   x_j^{-1} x_k = x_k x_{j+1}^{-1}  (j > k)
  // then sorts it into the positive block with x_i x_k = x_k x_{i+1} (k < i).
  void push_positive(Index k) {
    std::size_t t = 0;
    for (; t < neg_.size(); ++t) {
      if (neg_[t] < k) {
        ++k;
      } else if (neg_[t] == k) {
        neg_.erase(neg_.begin() + static_cast<std::ptrdiff_t>(t));
        return;
      } else {
        break;
      }
    }
    for (; t < neg_.size(); ++t) ++neg_[t];
    auto at = std::upper_bound(pos_.begin(), pos_.end(), k);
    for (auto it = at; it != pos_.end(); ++it) ++*it;
    pos_.insert(at, k);
  }

  // Sorts x_k^{-1} into the negative block using
  //   x_j^{-1} x_k^{-1} = x_{k+1}^{-1} x_j^{-1}  (j < k).
  void push_negative(Index k) {
    std::size_t t = 0;
    while (t < neg_.size() && neg_[t] < k) {
      ++k;
      ++t;
    }
    neg_.insert(neg_.begin() + static_cast<std::ptrdiff_t>(t), k);
  }

  std::vector<Index> pos_;
  std::vector<Index> neg_;
};

std::optional<std::string> normal_form_violation(const std::vector<Term>& positive,
                                                 const std::vector<Term>& negative) {
  for (const auto* block : {&positive, &negative}) {
    for (std::size_t t = 0; t < block->size(); ++t) {
      const Term& term = (*block)[t];
      if (term.index < 0) return "negative index";
      if (term.exponent <= 0) return "exponent not positive";
      if (t > 0 && (*block)[t - 1].index >= term.index) {
        return "indices not strictly increasing";
      }
    }
  }
  if (!positive.empty() && !negative.empty() &&
      positive.back().index == negative.back().index) {
    return "largest positive and negative indices coincide";
  }
  for (const Term& t : positive) {
    if (has_index(negative, t.index) && !has_index(positive, t.index + 1) &&
        !has_index(negative, t.index + 1)) {
      return "x_" + std::to_string(t.index) + " and its inverse occur without x_" +
             std::to_string(t.index + 1);
    }
  }
  return std::nullopt;
}

std::optional<NormalForm> NormalForm::try_from_blocks(std::vector<Term> positive,
                                                      std::vector<Term> negative) {
  if (normal_form_violation(positive, negative)) return std::nullopt;
  NormalForm nf;
  nf.positive_ = std::move(positive);
  nf.negative_ = std::move(negative);
  return nf;
}

NormalForm NormalForm::from_blocks(std::vector<Term> positive,
                                   std::vector<Term> negative) {
  if (auto why = normal_form_violation(positive, negative)) {
    throw std::invalid_argument("not a normal form: " + *why);
  }
  return *try_from_blocks(std::move(positive), std::move(negative));
}

std::int64_t NormalForm::exponent_sum() const noexcept {
  std::int64_t s = 0;
  for (const Term& t : positive_) s += t.exponent;
  for (const Term& t : negative_) s += t.exponent;
  return s;
}

NormalForm normalize(const Word& w) {
  NormalFormBuilder b;
  for (Letter l : free_reduce(w)) b.multiply(l);
  return std::move(b).finish();
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  NormalFormBuilder builder(a);
  for (Letter l : to_word(b)) builder.multiply(l);
  return std::move(builder).finish();
}

NormalForm invert(const NormalForm& a) {
  NormalForm r;
  r.positive_ = a.negative_;
  r.negative_ = a.positive_;
  return r;
}

NormalForm power(const NormalForm& a, std::int64_t n) {
  return normalize(power(to_word(a), n));
}

NormalForm shift(const NormalForm& a, Index k) {
  if (k < 0) throw std::invalid_argument("shift amount must be nonnegative");
  NormalForm r = a;
  for (Term& t : r.positive_) t.index += k;
  for (Term& t : r.negative_) t.index += k;
  return r;
}

std::int64_t d_statistic(const NormalForm& a) {
  std::int64_t d = a.exponent_sum();
  if (!a.positive().empty()) d += a.positive().back().index;
  if (!a.negative().empty()) d += a.negative().back().index;
  return d;
}

Word to_word(const NormalForm& a) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(a.exponent_sum()));
  for (const Term& t : a.positive()) {
    out.insert(out.end(), static_cast<std::size_t>(t.exponent), gen(t.index));
  }
  for (auto it = a.negative().rbegin(); it != a.negative().rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->exponent), gen_inv(it->index));
  }
  return Word(std::move(out));
}

}  // namespace thompson
