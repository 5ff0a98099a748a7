#include <map>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/plmap.hpp"
#include "thompson/serialize.hpp"

using namespace thompson;

namespace {

NormalForm nf(const char* text) { return normalize(parse_word(text)); }

NormalForm blocks(std::vector<Term> pos, std::vector<Term> neg) {
  return NormalForm::from_blocks(std::move(pos), std::move(neg));
}

}  // namespace

TEST_CASE("normalize examples") {
  NormalForm a = nf("x1 x0");
  CHECK(a.positive() == std::vector<Term>{{0, 1}, {2, 1}});
  CHECK(a.negative().empty());
  CHECK(nf("x1 x3 x1^-1") == blocks({{2, 1}}, {}));
  CHECK(nf("x0 x1^-1 x0 x1^-1") == blocks({{0, 2}}, {{1, 1}, {2, 1}}));
  CHECK(to_string(nf("x0 x1^-1 x0 x1^-1")) == "x0^2 x2^-1 x1^-1");
  CHECK(nf("").is_identity());
  CHECK(nf("x3 x3^-1 x0^-1 x0").is_identity());
}

TEST_CASE("extra-condition cleanup") {
  // x1 x3 x1^-1 is not normal (1 in both blocks, 2 absent) and collapses.
  CHECK(normal_form_violation({{1, 1}, {3, 1}}, {{1, 1}}).has_value());
  CHECK(nf("x1 x3 x1^-1") == blocks({{2, 1}}, {}));
  // x0 x2 x0^-1 with index 1 absent collapses to x1.
  CHECK(nf("x0 x2 x0^-1") == blocks({{1, 1}}, {}));
  // x0 x1 x0^-1 is already normal.
  CHECK(nf("x0 x1 x0^-1") == blocks({{0, 1}, {1, 1}}, {{0, 1}}));
  // Two nested violations resolve completely.
  CHECK(nf("x0 x1 x4 x1^-1 x0^-1") == blocks({{2, 1}}, {}));
}

TEST_CASE("multiply, invert, power") {
  CHECK(multiply(nf("x0"), nf("x0^-1")).is_identity());
  CHECK(multiply(nf("x1"), nf("x0")) == nf("x0 x2"));
  CHECK(multiply(nf("x0 x1^-1"), nf("x2")) == blocks({{0, 1}, {3, 1}}, {{1, 1}}));

  CHECK(invert(NormalForm()).is_identity());
  NormalForm inv = invert(nf("x0 x2"));
  CHECK(inv.positive().empty());
  CHECK(inv.negative() == std::vector<Term>{{0, 1}, {2, 1}});
  CHECK(to_string(inv) == "x2^-1 x0^-1");
  CHECK(invert(nf("x0^2 x2^-1 x1^-1")) == blocks({{1, 1}, {2, 1}}, {{0, 2}}));

  NormalForm h = nf("x0 x1^-1");
  CHECK(power(h, 2) == nf("x0 x1^-1 x0 x1^-1"));
  CHECK(power(h, -2) == invert(power(h, 2)));
  CHECK(power(h, 0).is_identity());
}

TEST_CASE("shift") {
  CHECK(shift(nf("x0"), 1) == nf("x1"));
  CHECK(shift(nf("x0 x1^-1"), 2) == blocks({{2, 1}}, {{3, 1}}));
  NormalForm a = nf("x0^2 x2^-1 x1^-1");
  CHECK(shift(a, 0) == a);
  CHECK_THROWS_AS(shift(a, -1), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    NormalForm u = normalize(testing::random_test_word(rng, 10, 4));
    NormalForm v = normalize(testing::random_test_word(rng, 10, 4));
    Index p = static_cast<Index>(rng() % 4);
    Index q = static_cast<Index>(rng() % 4);
    CHECK(shift(shift(u, p), q) == shift(u, p + q));
    CHECK(shift(multiply(u, v), p) == multiply(shift(u, p), shift(v, p)));
    CHECK((shift(u, p) == shift(v, p)) == (u == v));
  }
}

TEST_CASE("phi law holds for normal forms") {
  std::mt19937_64 rng(43);
  NormalForm x0 = nf("x0");
  for (int trial = 0; trial < 200; ++trial) {
    NormalForm x = normalize(testing::random_test_word(rng, 12, 5));
    CHECK(shift(x, 2) == multiply(multiply(invert(x0), shift(x, 1)), x0));
  }
}

TEST_CASE("d_statistic and to_word") {
  CHECK(d_statistic(NormalForm()) == 0);
  CHECK(d_statistic(nf("x0^2 x2^-1 x1^-1")) == 6);
  CHECK(d_statistic(nf("x2")) == 3);
  CHECK(d_statistic(nf("x0")) == 1);
  CHECK(to_word(NormalForm()).empty());
  CHECK(to_word(nf("x0^2 x2^-1 x1^-1")) ==
        Word{gen(0), gen(0), gen_inv(2), gen_inv(1)});
  CHECK(to_word(nf("x0 x2")) == Word{gen(0), gen(2)});
  CHECK(nf("x0^2 x2^-1 x1^-1").exponent_sum() == 4);
}

TEST_CASE("from_blocks validates every condition") {
  CHECK_THROWS_AS(blocks({{0, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(blocks({{2, 1}, {1, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(blocks({}, {{3, 1}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(blocks({{2, 1}}, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(blocks({{0, 1}, {3, 1}}, {{0, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(blocks({{-1, 1}}, {}), std::invalid_argument);
  CHECK_FALSE(NormalForm::try_from_blocks({{1, 1}}, {{1, 1}}).has_value());
  CHECK(NormalForm::try_from_blocks({{0, 1}, {1, 1}}, {{0, 1}}).has_value());
}

TEST_CASE("normal forms are sound against the PL model") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = testing::random_test_word(rng, 16, 6);
    NormalForm a = normalize(w);
    CHECK(from_word(to_word(a)) == from_word(w));
    CHECK(a.exponent_sum() <= static_cast<std::int64_t>(free_reduce(w).size()));
    CHECK_FALSE(normal_form_violation(a.positive(), a.negative()).has_value());
    CHECK(normalize(to_word(a)) == a);
  }
}

TEST_CASE("equal elements get identical normal forms") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = testing::random_test_word(rng, 10, 4);
    Word v = w;
    for (int step = 0; step < 3; ++step) v = testing::insert_trivial(rng, v, 4);
    CHECK(from_word(v) == from_word(w));
    CHECK(normalize(v) == normalize(w));
  }

  // Short words over few generators collide often; group them by their map.
  std::map<std::string, NormalForm> by_map;
  std::size_t collisions = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    Word w = testing::random_test_word(rng, 6, 2);
    NormalForm a = normalize(w);
    auto [it, fresh] = by_map.emplace(from_word(w).key(), a);
    if (!fresh) {
      ++collisions;
      CHECK(it->second == a);
    }
  }
  CHECK(collisions > 100);
  // Distinct maps never share a normal form.
  std::map<std::string, std::string> by_form;
  for (const auto& [key, a] : by_map) {
    auto [it, fresh] = by_form.emplace(to_string(a), key);
    CHECK(fresh);
  }
}

TEST_CASE("multiply is a homomorphism onto PL composition") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    NormalForm a = normalize(testing::random_test_word(rng, 12, 5));
    NormalForm b = normalize(testing::random_test_word(rng, 12, 5));
    CHECK(from_word(to_word(multiply(a, b))) ==
          compose(from_word(to_word(a)), from_word(to_word(b))));
    CHECK(multiply(a, invert(a)).is_identity());
  }
}

TEST_CASE("json encoding") {
  NormalForm a = nf("x0^2 x2^-1 x1^-1");
  CHECK(to_json(a).dump() == R"({"neg":[[1,1],[2,1]],"pos":[[0,2]]})");
  CHECK(normal_form_from_json(to_json(a)) == a);
  CHECK_THROWS(normal_form_from_json(Json::parse(R"({"pos":[[2,1]],"neg":[[2,1]]})")));
}
