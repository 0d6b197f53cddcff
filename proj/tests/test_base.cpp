#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nas/gf.hpp"
#include "nas/multi_index.hpp"

using namespace nas;

TEST_CASE("field arithmetic over F_9") {
  const GF* f = GF::get(3, 2);
  GfElem g = f->gen();
  // g^2 = g + 1
  CHECK(g * g == g + f->one());
  CHECK(g * f->one() == g);
  CHECK((g * f->zero()).is_zero());
  // frobenius(g) = g^3 = 2g + 1
  CHECK(g.frobenius(1) == f->from_coords({1, 2}));
  CHECK(g.frobenius(2) == g);
  CHECK(g.frobenius(-1) == g.frobenius(1));
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, n0] : {std::pair<Int, int>{3, 2}, {5, 1}, {7, 2}, {5, 3}}) {
    const GF* f = GF::get(p, n0);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Int> pick(0, f->q() - 1);
    for (int t = 0; t < 200; ++t) {
      GfElem a = f->element(pick(rng));
      GfElem b = f->element(pick(rng));
      GfElem c = f->element(pick(rng));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == f->zero());
      if (!a.is_zero()) CHECK(a * a.inv() == f->one());
      // frobenius is a ring homomorphism
      CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
      CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
      // trace is frobenius-invariant
      CHECK(a.trace() == a.frobenius(1).trace());
      // full frobenius orbit is the identity
      CHECK(a.frobenius(n0) == a);
    }
  }
}

TEST_CASE("alpha0 selection") {
  // prime field: alpha0 = 1
  CHECK(GF::get(5, 1)->alpha0() == GF::get(5, 1)->one());
  CHECK(GF::get(5, 1)->alpha0().trace() == 1);
  // F_9: basis monomials come first, Tr(g) = g + g^3 = 1
  const GF* f9 = GF::get(3, 2);
  CHECK(f9->alpha0() == f9->gen());
  CHECK(f9->alpha0().trace() == 1);
  for (auto [p, n0] : {std::pair<Int, int>{7, 2}, {3, 3}, {5, 3}})
    CHECK(GF::get(p, n0)->alpha0().trace() == 1);
}

TEST_CASE("mismatched field parameters") {
  GfElem a = GF::get(3, 2)->one();
  GfElem b = GF::get(5, 1)->one();
  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
}

TEST_CASE("lexicographic order and Z_N^+(p)") {
  MultiIndex a{0, 3}, b{5, 0}, c{0, -1};
  CHECK(a.in_Zplus(5));
  CHECK_FALSE(b.in_Zplus(5)); // all components divisible by 5
  CHECK_FALSE(c.in_Zplus(5)); // lex-negative
  CHECK(MultiIndex{1, -7} > MultiIndex{0, 100});
  // total order compatible with addition
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> pick(-20, 20);
  for (int t = 0; t < 200; ++t) {
    MultiIndex x{pick(rng), pick(rng)}, y{pick(rng), pick(rng)}, z{pick(rng), pick(rng)};
    if (x < y) CHECK(x + z < y + z);
    CHECK((x < y) + (y < x) + (x == y) == 1);
  }
}

TEST_CASE("p-depth decomposition") {
  MultiIndex a{-5, -10};
  CHECK((-a).p_depth(5) == 1);
  CHECK((-a).divided_by(5) == MultiIndex{1, 2});
  CHECK(MultiIndex{25, 50}.p_depth(5) == 2);
  CHECK(MultiIndex{25, 51}.p_depth(5) == 0);
}
