#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thompson/words.hpp"

using namespace thompson;

TEST_CASE("parse_word expands terms and exponents") {
  CHECK(parse_word("x0 x1^-1") == Word{gen(0), gen_inv(1)});
  CHECK(parse_word("x2^3") == Word{gen(2), gen(2), gen(2)});
  CHECK(parse_word("").empty());
  CHECK(parse_word("   ").empty());
  CHECK(parse_word("  x10\tx3^-2 ") == Word{gen(10), gen_inv(3), gen_inv(3)});
}

TEST_CASE("parse_word reports malformed input with a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("y0") == 0);
  CHECK(position_of("x") == 1);
  CHECK(position_of("x0 x1^") == 6);
  CHECK(position_of("x0x1") == 2);
  CHECK(position_of("x1^0") == 3);
  CHECK(position_of("x-1") == 1);
  CHECK(position_of("x0 -x1") == 3);
  CHECK(position_of("x2^+1") == 3);

  CHECK_THROWS_AS(parse_word("x2147483648"), ParseError);
  CHECK(parse_word("x2147483647") == Word{gen(2147483647)});
}

TEST_CASE("format_word collects runs into exponents") {
  CHECK(format_word(Word{gen(0), gen_inv(1)}) == "x0 x1^-1");
  CHECK(format_word(Word{}) == "");
  CHECK(format_word(Word{gen(2), gen(2), gen(2)}) == "x2^3");
  CHECK(format_word(Word{gen(2), gen_inv(2)}) == "x2 x2^-1");
}

TEST_CASE("format/parse round trip on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = testing::random_test_word(rng, 20, 5);
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(Word{gen(0), gen_inv(0)}).empty());
  CHECK(free_reduce(Word{gen(1), gen(0), gen_inv(0), gen_inv(1)}).empty());
  CHECK(free_reduce(Word{gen(1), gen(0)}) == Word{gen(1), gen(0)});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = testing::random_test_word(rng, 20, 2);
    Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= w.size());
    for (std::size_t i = 1; i < r.size(); ++i) CHECK_FALSE(r[i - 1].is_inverse_of(r[i]));
  }
}

TEST_CASE("invert_word") {
  CHECK(invert_word(Word{gen(0), gen_inv(1)}) == Word{gen(1), gen_inv(0)});
  CHECK(invert_word(Word{}).empty());
  CHECK(invert_word(Word{gen(2), gen(2)}) == Word{gen_inv(2), gen_inv(2)});

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = testing::random_test_word(rng, 15, 4);
    CHECK(free_reduce(w * invert_word(w)).empty());
    CHECK(invert_word(invert_word(w)) == w);
  }
}

TEST_CASE("power and signed length") {
  Word w = parse_word("x0 x1^-1");
  CHECK(power(w, 2) == parse_word("x0 x1^-1 x0 x1^-1"));
  CHECK(power(w, -1) == parse_word("x1 x0^-1"));
  CHECK(power(w, 0).empty());
  CHECK(parse_word("x3^4 x1^-1").signed_length() == 3);
}
