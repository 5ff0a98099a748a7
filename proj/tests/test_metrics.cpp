#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thompson/metrics.hpp"
#include "thompson/serialize.hpp"

using namespace thompson;

namespace {

NormalForm nf(const char* text) { return normalize(parse_word(text)); }

}  // namespace

TEST_CASE("rewrite_to_finite_gens") {
  CHECK(rewrite_to_finite_gens(nf("x2")) == parse_word("x0^-1 x1 x0"));
  CHECK(rewrite_to_finite_gens(nf("x1")) == parse_word("x1"));
  Word w = rewrite_to_finite_gens(nf("x2 x3"));
  CHECK(w == parse_word("x0^-1 x1 x0^-1 x1 x0^2"));
  CHECK(w.size() == 6);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    NormalForm a = normalize(testing::random_test_word(rng, 10, 6));
    Word r = rewrite_to_finite_gens(a);
    CHECK(r.max_index() <= 1);
    CHECK(from_word(r) == from_word(to_word(a)));
    CHECK(static_cast<std::int64_t>(r.size()) <= 3 * d_statistic(a));
  }
}

TEST_CASE("D-statistic sandwich bounds") {
  NormBounds b = prop2_bounds(nf("x2"));
  CHECK(b.prop2_lb == Rational(-3, 2));
  CHECK(b.prop2_ub == 9);
  b = prop2_bounds(NormalForm());
  CHECK(b.prop2_lb == Rational(-2));
  CHECK(b.prop2_ub == 0);
  b = prop2_bounds(nf("x0^2 x2^-1 x1^-1"));
  CHECK(b.prop2_lb == Rational(-1));
  CHECK(b.prop2_ub == 18);
  CHECK(norm_bounds(nf("x5")).lemma1_lb == 5);
  CHECK(to_json(norm_bounds(nf("x2"))).dump() ==
        R"({"lemma1_lb":2,"prop2_lb":[-3,2],"prop2_ub":9})");
}

TEST_CASE("breakpoint lower bound") {
  CHECK(lemma1_lower_bound(generator(1)) == 1);
  CHECK(lemma1_lower_bound(PLMap()) == 0);
  CHECK(lemma1_lower_bound(generator(5)) == 5);
  CHECK(lemma1_lower_bound(generator(5)) <=
        static_cast<std::int64_t>(rewrite_to_finite_gens(nf("x5")).size()));
  // Fractional coordinates round up: x0 x1^-1 has a node at (1, 3/2).
  CHECK(lemma1_lower_bound(from_word(parse_word("x0 x1^-1"))) == 1);
}

TEST_CASE("exact norms agree with exhaustive search") {
  CHECK(exact_norm(PLMap(), 3) == 0);
  CHECK(exact_norm(generator(0), 3) == 1);
  CHECK(exact_norm(generator(2), 5) == 3);
  CHECK(testing::naive_norm(generator(2), 3) == 3);
  CHECK_FALSE(exact_norm(generator(2), 2).has_value());
  CHECK(exact_norm(generator(3), 5) == testing::naive_norm(generator(3), 5));

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    PLMap f = from_word(testing::random_test_word(rng, 4, 1));
    CHECK(exact_norm(f, 4) == testing::naive_norm(f, 4));
  }
}

TEST_CASE("small balls match naive enumeration") {
  CHECK(ball_sizes(0).sphere_sizes == std::vector<std::size_t>{1});
  CHECK(ball_sizes(1).sphere_sizes == std::vector<std::size_t>{1, 4});
  auto naive = testing::naive_sphere_sizes(3);
  BallStats s = ball_sizes(3);
  CHECK(s.sphere_sizes == naive);
  CHECK(s.total == 1 + 4 + 12 + 36);
  CHECK(to_json(ball_sizes(2)).dump() == R"({"radius":2,"spheres":[1,4,12],"total":17})");
}

TEST_CASE("growth series and worker determinism") {
  const std::vector<std::size_t> known{1, 4, 12, 36, 108, 314, 906, 2576};
  CayleyBall one = CayleyBall::build_f(7, {.workers = 1});
  CayleyBall three = CayleyBall::build_f(7, {.workers = 3});
  CHECK(one.sphere_sizes() == known);
  CHECK(three.sphere_sizes() == known);
  REQUIRE(one.size() == three.size());
  bool same_order = true;
  for (std::size_t i = 0; i < one.size(); ++i) same_order = same_order && one.key(i) == three.key(i);
  CHECK(same_order);
}

TEST_CASE("resource cap") {
  CHECK_THROWS_AS(CayleyBall::build_f(6, {.cap_states = 100}), ResourceLimitError);
  CHECK_THROWS_AS(exact_norm(generator(9), 30, {.cap_states = 1000}), ResourceLimitError);
}

TEST_CASE("geodesics, symmetry and the bounds on a ball") {
  CayleyBall ball = CayleyBall::build_f(6, {.track_parents = true});
  for (std::size_t i = 0; i < ball.size(); ++i) {
    PLMap f = ball.element(i);
    Word g = geodesic_word(ball, i);
    CHECK(static_cast<int>(g.size()) == ball.distance(i));
    CHECK(from_word(g) == f);
    CHECK(ball.distance(invert(f)) == ball.distance(i));
    CHECK(lemma1_lower_bound(f) <= ball.distance(i));
    NormalForm a = normalize(g);
    NormBounds b = prop2_bounds(a);
    CHECK(b.prop2_lb <= Rational(ball.distance(i)));
    CHECK(ball.distance(i) <= b.prop2_ub);
    CHECK(ball.distance(i) <= static_cast<int>(rewrite_to_finite_gens(a).size()));
  }
}

TEST_CASE("presentation check") {
  PresentationReport ok = check_presentation({});
  CHECK(ok.passed);
  CHECK(ok.failures.empty());
  CHECK(ok.checks > 200);

  // f_1 with its second node moved so that it still has dyadic slopes but
  // no longer satisfies the relations.
  PresentationCheckOptions bad;
  bad.generators = [](Index k) {
    if (k == 1) return PLMap::from_nodes({{1, 1}, {3, 5}}, 2);
    return generator(k);
  };
  PresentationReport report = check_presentation(bad);
  CHECK_FALSE(report.passed);
  REQUIRE_FALSE(report.failures.empty());
  CHECK_FALSE(report.failures.front().witness.empty());

  CHECK(finite_relators().size() == 2);
  for (const Word& r : finite_relators()) CHECK(from_word(r).is_identity());
}
