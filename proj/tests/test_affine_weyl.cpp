#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kradm/affine_weyl.hpp"
#include "oracles.hpp"

using namespace kradm;

namespace {

RatVec random_point(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<Int> num(-50, 50);
  std::uniform_int_distribution<Int> den(1, 13);
  RatVec p(d);
  for (auto& x : p) x = Rational(num(rng), den(rng));
  return p;
}

const std::vector<std::string> kGroups{"A1", "GL2", "GL3", "A2", "C2", "G2", "B3", "GL4"};

}  // namespace

TEST_CASE("translations") {
  auto a1 = parse_group("A1");
  CHECK(make_translation(a1, {0}) == identity_element(a1));
  // t_{alpha^vee} moves the origin to -alpha^vee
  CHECK(kradm::apply(make_translation(a1, {1}), RatVec{Rational(0)}) == RatVec{Rational(-1)});
  auto gl3 = parse_group("GL3");
  CHECK(make_translation(gl3, {1, 0, 2}) * make_translation(gl3, {0, -1, 1}) == make_translation(gl3, {1, -1, 3}));
}

TEST_CASE("group law and action") {
  std::mt19937_64 rng(11);
  for (const auto& g : kGroups) {
    CAPTURE(g);
    auto rs = parse_group(g);
    for (int trial = 0; trial < 100; ++trial) {
      AffineElt a = oracle::random_element(rs, rng, 3, 6);
      AffineElt b = oracle::random_element(rs, rng, 3, 6);
      CHECK(a * invert(a) == identity_element(rs));
      CHECK(invert(a) * a == identity_element(rs));
      RatVec x = random_point(rng, rs->dim());
      CHECK(kradm::apply(a * b, x) == kradm::apply(a, kradm::apply(b, x)));
    }
  }
}

TEST_CASE("s_{alpha,1} s_alpha in A1 is t_{-alpha^vee}") {
  auto a1 = parse_group("A1");
  AffineElt prod = make_reflection(a1, {0, 1}) * make_reflection(a1, {0, 0});
  CHECK(prod.is_translation());
  // the composite moves every point by +alpha^vee, which is t_{-alpha^vee}
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    RatVec x = random_point(rng, 1);
    CHECK(kradm::apply(prod, x)[0] == x[0] + 1);
  }
  CHECK(prod == make_translation(a1, {-1}));
}

TEST_CASE("affine reflections fix their hyperplane and are involutions") {
  for (const auto& g : kGroups) {
    auto rs = parse_group(g);
    for (std::size_t k = 0; k < rs->positive_roots().size(); ++k)
      for (Int level = -2; level <= 2; ++level) {
        AffineElt s = make_reflection(rs, {k, level});
        CHECK(s * s == identity_element(rs));
        // a point on <x, alpha> = level: level * alpha^vee / 2
        RatVec x(rs->dim());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = Rational(level * rs->positive_coroots()[k][i], 2);
        CHECK(kradm::apply(s, x) == x);
      }
  }
}

TEST_CASE("length normalization") {
  auto a1 = parse_group("A1");
  CHECK(length(identity_element(a1)) == 0);
  CHECK(length(make_translation(a1, {1})) == 2);
  auto gl3 = parse_group("GL3");
  CHECK(length(make_translation(gl3, {1, 0, 0})) == 2);
  CHECK(length_by_hyperplanes(make_translation(gl3, {1, 0, 0})) == 2);
  for (const auto& g : kGroups) {
    auto rs = parse_group(g);
    for (int i = 0; i <= rs->rank(); ++i) CHECK(length(simple_reflection(rs, i)) == 1);
  }
}

TEST_CASE("length of translations is <2rho, lambda^+>") {
  std::mt19937_64 rng(5);
  for (const auto& g : kGroups) {
    auto rs = parse_group(g);
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
      IntVec lam(rs->dim());
      for (auto& x : lam) x = coord(rng);
      auto t = make_translation(rs, lam);
      auto expected = static_cast<std::size_t>(rs->pair_2rho(dominant_representative(*rs, lam).dominant));
      CHECK(length(t) == expected);
      CHECK(length_by_hyperplanes(t) == expected);
    }
  }
}

TEST_CASE("closed-form length equals the separating-hyperplane count") {
  std::mt19937_64 rng(2024);
  for (const auto& g : kGroups) {
    CAPTURE(g);
    auto rs = parse_group(g);
    for (int trial = 0; trial < 1000; ++trial) {
      AffineElt a = oracle::random_element(rs, rng, 4, 10);
      REQUIRE(length(a) == length_by_hyperplanes(a));
    }
  }
}

TEST_CASE("omega_class") {
  auto gl2 = parse_group("GL2");
  CHECK(omega_class(simple_reflection(gl2, 0)) == omega_class(identity_element(gl2)));
  CHECK(omega_class(make_translation(gl2, {1, 0})) != omega_class(identity_element(gl2)));
  std::mt19937_64 rng(9);
  for (const auto& g : kGroups) {
    auto rs = parse_group(g);
    for (int i = 0; i <= rs->rank(); ++i) CHECK(omega_class(simple_reflection(rs, i)) == omega_class(identity_element(rs)));
    for (int trial = 0; trial < 50; ++trial) {
      AffineElt a = oracle::random_element(rs, rng, 3, 6);
      AffineElt b = oracle::random_element(rs, rng, 3, 6);
      CHECK(omega_class(a * b) == rs->omega_label(omega_class(a) + omega_class(b)));
    }
  }
}

TEST_CASE("reduced words") {
  auto a1 = parse_group("A1");
  CHECK(reduced_word(identity_element(a1)).word.empty());
  std::mt19937_64 rng(17);
  for (const auto& g : kGroups) {
    auto rs = parse_group(g);
    for (int trial = 0; trial < 200; ++trial) {
      AffineElt a = oracle::random_element(rs, rng, 2, 6);
      ReducedWord rw = reduced_word(a);
      CHECK(rw.word.size() == length(a));
      CHECK(length(rw.omega) == 0);
      CHECK(from_word(rs, rw.word, rw.omega) == a);
    }
  }
  CHECK(parse_word(word_string({1, 0, 2})) == std::vector<int>{1, 0, 2});
  CHECK(word_string({}) == "e");
  CHECK_THROWS(parse_word("1..2"));
  CHECK_THROWS(parse_word("a"));
}

TEST_CASE("bruhat order basics") {
  auto gl2 = parse_group("GL2");
  auto t10 = make_translation(gl2, {1, 0});
  auto t01 = make_translation(gl2, {0, 1});
  CHECK(bruhat_leq(t10, t10));
  CHECK_FALSE(bruhat_leq(t10, t01));
  CHECK_FALSE(bruhat_leq(t01, t10));
  // different Omega-classes are incomparable
  CHECK_FALSE(bruhat_leq(identity_element(gl2), t10));
  auto a1 = parse_group("A1");
  CHECK(bruhat_leq(identity_element(a1), make_translation(a1, {2})));
  CHECK_THROWS_AS(bruhat_leq(identity_element(a1), identity_element(gl2)), GroupMismatch);
}

TEST_CASE("bruhat order agrees with the subword criterion on random pairs") {
  std::mt19937_64 rng(99);
  for (const auto& g : {"A1", "A2", "C2", "G2", "GL3"}) {
    auto rs = parse_group(g);
    for (int trial = 0; trial < 200; ++trial) {
      AffineElt y = oracle::random_element(rs, rng, 1, 5);
      // x drawn near y so comparable pairs actually occur
      AffineElt x = y;
      std::uniform_int_distribution<int> steps(0, 3), letter(0, rs->rank());
      for (int s = steps(rng); s > 0; --s) x = simple_reflection(rs, letter(rng)) * x;
      CHECK(bruhat_leq(x, y) == oracle::subword_leq(x, y));
    }
  }
}

TEST_CASE("lower covers") {
  auto a1 = parse_group("A1");
  CHECK(lower_covers(identity_element(a1)).empty());
  // exhaustive: in the infinite dihedral group t_{alpha^vee} (length 2)
  // covers both length-1 elements
  std::vector<AffineElt> expected;
  for (std::size_t k = 0; k < 1; ++k)
    for (Int level = -3; level <= 3; ++level) {
      AffineElt x = make_reflection(a1, {k, level}) * make_translation(a1, {1});
      if (length(x) == 1) expected.push_back(x);
    }
  auto covers = lower_covers(make_translation(a1, {1}));
  REQUIRE(covers.size() == expected.size());
  CHECK(covers.size() == 2);
  for (std::size_t i = 0; i < covers.size(); ++i) CHECK(covers[i].element == expected[i]);

  std::mt19937_64 rng(41);
  for (const auto& g : kGroups) {
    auto rs = parse_group(g);
    for (int trial = 0; trial < 40; ++trial) {
      AffineElt y = oracle::random_element(rs, rng, 2, 6);
      auto c = lower_covers(y);
      // the default level bound loses nothing compared with a much larger one
      auto wide = lower_covers(y, cover_level_bound(y) + 6);
      CHECK(c.size() == wide.size());
      for (const auto& lc : c) {
        CHECK(length(lc.element) + 1 == length(y));
        CHECK(bruhat_leq(lc.element, y));
        CHECK(make_reflection(rs, lc.reflection) * y == lc.element);
      }
    }
  }
}
