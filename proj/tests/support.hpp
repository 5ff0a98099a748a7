#pragma once

// Test-only generators and brute-force oracles. Nothing here goes through the
// normal-form engine or the hashed Cayley-ball search.

#include <cstdint>
#include <random>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/words.hpp"

namespace thompson::testing {

inline Word random_test_word(std::mt19937_64& rng, std::size_t max_length,
                             Index max_index) {
  std::size_t len = rng() % (max_length + 1);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    Index idx = static_cast<Index>(rng() % static_cast<std::uint64_t>(max_index + 1));
    out.push_back({idx, (rng() & 1) ? 1 : -1});
  }
  return Word(std::move(out));
}

// All words of length exactly n over {x0, x0^-1, x1, x1^-1}.
inline std::vector<Word> all_words_of_length(std::size_t n) {
  const Letter letters[] = {gen(0), gen_inv(0), gen(1), gen_inv(1)};
  std::vector<Word> out{Word{}};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (Letter l : letters) next.push_back(w * Word{l});
    }
    out = std::move(next);
  }
  return out;
}

// Sphere sizes up to `radius` by enumerating every word and deduplicating with
// pairwise map equality (no hashing, no canonical keys).
inline std::vector<std::size_t> naive_sphere_sizes(std::size_t radius) {
  std::vector<PLMap> seen;
  std::vector<std::size_t> spheres;
  for (std::size_t n = 0; n <= radius; ++n) {
    std::size_t fresh = 0;
    for (const Word& w : all_words_of_length(n)) {
      PLMap f = from_word(w);
      bool known = false;
      for (const PLMap& g : seen) known = known || equals(f, g);
      if (!known) {
        seen.push_back(f);
        ++fresh;
      }
    }
    spheres.push_back(fresh);
  }
  return spheres;
}

// Shortest length of a word in x0, x1 representing f, by exhaustive search.
inline std::optional<int> naive_norm(const PLMap& f, std::size_t max_radius) {
  for (std::size_t n = 0; n <= max_radius; ++n) {
    for (const Word& w : all_words_of_length(n)) {
      if (equals(from_word(w), f)) return static_cast<int>(n);
    }
  }
  return std::nullopt;
}

// Inserts a trivial subword (a cancelling pair or a relator x_i^-1 x_j x_i x_{j+1}^-1
// or its inverse) at a random position.
inline Word insert_trivial(std::mt19937_64& rng, const Word& w, Index max_index) {
  std::vector<Letter> out(w.begin(), w.end());
  Word inserted;
  Index i = static_cast<Index>(rng() % static_cast<std::uint64_t>(max_index + 1));
  if (rng() % 2 == 0) {
    inserted = Word{gen(i), gen_inv(i)};
    if (rng() % 2) inserted = invert_word(inserted);
  } else {
    Index j = i + 1 + static_cast<Index>(rng() % 3);
    inserted = Word{gen_inv(i), gen(j), gen(i), gen_inv(j + 1)};
    if (rng() % 2) inserted = invert_word(inserted);
  }
  auto at = out.begin() + static_cast<std::ptrdiff_t>(rng() % (out.size() + 1));
  out.insert(at, inserted.begin(), inserted.end());
  return Word(std::move(out));
}

}  // namespace thompson::testing
