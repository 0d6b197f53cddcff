#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nas/series.hpp"

using namespace nas;

namespace {

Series rand_series(std::mt19937_64& rng, const GF* f, const Window& w, int nterms) {
  std::uniform_int_distribution<Int> e(-6, 6);
  std::uniform_int_distribution<Int> c(0, f->q() - 1);
  Series s(f, w);
  for (int t = 0; t < nterms; ++t) s.add_term(MultiIndex{e(rng), e(rng)}, f->element(c(rng)));
  return s;
}

} // namespace

TEST_CASE("ring operations and truncation") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{2, 0}, {10, 10});
  Series one = Series::one(f, w);
  Series t10 = Series::monomial(f, w, MultiIndex{1, 0}, f->one());
  Series t02 = Series::monomial(f, w, MultiIndex{0, 2}, f->one());
  CHECK(t10 + Series::zero(f, w) == t10);
  CHECK(t10 * t02 == Series::monomial(f, w, MultiIndex{1, 2}, f->one()));
  // (1 + t^(1,0)) (1 - t^(1,0)) = 1 once t^(2,0) is cut
  CHECK((one + t10) * (one - t10) == one);
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(11);
  for (auto [p, n0] : {std::pair<Int, int>{3, 2}, {5, 1}}) {
    const GF* f = GF::get(p, n0);
    // mixed-sign Laurent supports: exact without truncation
    Window wide = Window::unbounded(2);
    for (int t = 0; t < 40; ++t) {
      Series a = rand_series(rng, f, wide, 5);
      Series b = rand_series(rng, f, wide, 5);
      Series c = rand_series(rng, f, wide, 5);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
    // within a window the truncation ideal is multiplicative on supports
    // that cannot re-enter (componentwise nonnegative exponents)
    Window w = Window::lex_box(MultiIndex{9, 0}, {9, 9});
    std::uniform_int_distribution<Int> e(0, 6);
    std::uniform_int_distribution<Int> cc(0, f->q() - 1);
    for (int t = 0; t < 40; ++t) {
      Series a(f, w), b(f, w), c(f, w);
      for (int k = 0; k < 5; ++k) {
        a.add_term(MultiIndex{e(rng), e(rng)}, f->element(cc(rng)));
        b.add_term(MultiIndex{e(rng), e(rng)}, f->element(cc(rng)));
        c.add_term(MultiIndex{e(rng), e(rng)}, f->element(cc(rng)));
      }
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("inversion") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{3, 0}, {10, 10});
  Series one = Series::one(f, w);
  CHECK(one.inverted() == one);
  Series t10 = Series::monomial(f, w, MultiIndex{1, 0}, f->one());
  Series u = one + t10;
  // 1 - t + t^2 under window (3,0)
  Series expect = one - t10 + t10 * t10;
  CHECK(u.inverted() == expect);
  CHECK(u.inverted() * u == one);
  CHECK(t10.inverted() == Series::monomial(f, w, MultiIndex{-1, 0}, f->one()));
  // random units: monomial times a 1 + (nonnegative support) series, the
  // shape the pipeline inverts (E(omega^p) powers)
  Window ww = Window::lex_box(MultiIndex{20, 0}, {20, 20});
  Series wone = Series::one(f, ww);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> e(0, 4), sh(0, 5), c(0, 4);
  for (int t = 0; t < 40; ++t) {
    Series u = wone;
    for (int k = 0; k < 3; ++k) {
      Int e1 = e(rng), e2 = e(rng);
      if (e1 == 0 && e2 == 0) continue;
      u.add_term(MultiIndex{e1, e2}, f->element(c(rng)));
    }
    Series x = u.shifted(MultiIndex{sh(rng), sh(rng)});
    CHECK(x.inverted() * x == wone);
  }
}

TEST_CASE("artin-hasse as truncated exponential") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{25, 0}, {30, 30});
  Series x = Series::monomial(f, w, MultiIndex{5, 0}, f->one());
  Series e = artin_hasse(x);
  Series expect(f, w);
  expect.add_term(MultiIndex{0, 0}, f->one());
  expect.add_term(MultiIndex{5, 0}, f->one());
  expect.add_term(MultiIndex{10, 0}, f->from_int(3));
  expect.add_term(MultiIndex{15, 0}, f->one());
  expect.add_term(MultiIndex{20, 0}, f->from_int(4));
  CHECK(e == expect);
  CHECK(artin_hasse(Series::zero(f, w)) == Series::one(f, w));
  // E(x)E(y) = E(x+y) within the window
  Series y = Series::monomial(f, w, MultiIndex{6, 0}, f->from_int(2));
  CHECK(artin_hasse(x) * artin_hasse(y) == artin_hasse(x + y));
  // window too wide for the reduction
  Window wide = Window::lex_box(MultiIndex{26, 0}, {30, 30});
  CHECK_THROWS_AS(artin_hasse(Series::monomial(f, wide, MultiIndex{5, 0}, f->one())),
                  std::domain_error);
}

TEST_CASE("substitution automorphism h") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{25, 0}, {30, 30});
  Omega omega;
  omega.p = 5;
  omega.cbar0 = MultiIndex{5, 0};
  omega.beta.emplace(MultiIndex{0, 0}, f->one());

  Series t2 = Series::monomial(f, w, MultiIndex{0, 1}, f->one());
  CHECK(apply_h(1, omega, t2) == t2); // fixes the other variables

  Series t1inv = Series::monomial(f, w, MultiIndex{-1, 0}, f->one());
  Series got = apply_h(1, omega, t1inv);
  // t_1^{-1} (1 - A_0 t^{cbar0} + ...)
  CHECK(got.coeff(MultiIndex{-1, 0}) == f->one());
  CHECK(got.coeff(MultiIndex{4, 0}) == f->from_int(-1));

  // inverse pair: h(t_1^{-1}) h(t_1) = 1 within the window
  Series t1 = Series::monomial(f, w, MultiIndex{1, 0}, f->one());
  CHECK(apply_h(1, omega, t1inv) * apply_h(1, omega, t1) == Series::one(f, w));

  // ring homomorphism, exact where truncation commutes with products
  // (supports bounded below by the window analysis: nonnegative exponents)
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> e(0, 5), c(0, 4);
  for (int t = 0; t < 30; ++t) {
    Series a(f, w), b(f, w);
    for (int k = 0; k < 4; ++k) {
      a.add_term(MultiIndex{e(rng), e(rng)}, f->element(c(rng)));
      b.add_term(MultiIndex{e(rng), e(rng)}, f->element(c(rng)));
    }
    CHECK(apply_h(1, omega, a * b) == apply_h(1, omega, a) * apply_h(1, omega, b));
  }

  // h^(1) and h^(2) commute within the window on monomials
  for (Int e1 : {-2, 1, 3})
    for (Int e2 : {-1, 2}) {
      Series m = Series::monomial(f, w, MultiIndex{e1, e2}, f->one());
      CHECK(apply_h(1, omega, apply_h(2, omega, m)) == apply_h(2, omega, apply_h(1, omega, m)));
    }
}

TEST_CASE("A coefficients of E(omega^p)") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{25, 0}, {30, 30});
  Omega omega;
  omega.p = 5;
  omega.cbar0 = MultiIndex{5, 0};
  omega.beta.emplace(MultiIndex{0, 0}, f->one());
  auto A = omega_A_coeffs(omega, f, w);
  CHECK(A.at(MultiIndex{0, 0}) == f->one());
  // E(t^5) has A_{(1,0)} = 1/2, A_{(2,0)} = 1/6, A_{(3,0)} = 1/24
  CHECK(A.at(MultiIndex{1, 0}) == f->from_int(3));
  CHECK(A.at(MultiIndex{2, 0}) == f->one());
  CHECK(A.at(MultiIndex{3, 0}) == f->from_int(4));
  CHECK(A.size() == 4);

  // leading coefficient: A_0 = beta_0^p
  const GF* f9 = GF::get(3, 2);
  Window w9 = Window::lex_box(MultiIndex{9, 0}, {12, 12});
  Omega og;
  og.p = 3;
  og.cbar0 = MultiIndex{3, 0};
  og.beta.emplace(MultiIndex{0, 0}, f9->gen());
  auto A9 = omega_A_coeffs(og, f9, w9);
  CHECK(A9.at(MultiIndex{0, 0}) == f9->gen().frobenius(1));
}

TEST_CASE("full frobenius on series") {
  const GF* f9 = GF::get(3, 2);
  Window w = Window::lex_box(MultiIndex{30, 0}, {40, 40});
  Series s = Series::monomial(f9, w, MultiIndex{-1, 2}, f9->gen());
  Series fs = s.frobenius(1);
  CHECK(fs == Series::monomial(f9, w, MultiIndex{-3, 6}, f9->gen().frobenius(1)));
  CHECK(fs.frobenius(-1) == s);
  CHECK_THROWS_AS(s.frobenius(-1), std::domain_error);
}
