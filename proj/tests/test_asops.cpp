#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nas/sr_ops.hpp"

using namespace nas;

namespace {

Series mono(const GF* f, const Window& w, std::initializer_list<Int> e, const GfElem& c) {
  return Series::monomial(f, w, MultiIndex(e), c);
}

} // namespace

TEST_CASE("S operator cases") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{60, 0}, {60, 40});
  GfElem a0 = f->alpha0();
  GfElem alpha = f->from_int(3);

  // lex-positive exponent: S = 0
  CHECK(op_S(mono(f, w, {2, 0}, alpha), a0).is_zero());
  // prime field: S(alpha) = alpha
  CHECK(op_S(Series::monomial(f, w, MultiIndex::zero(2), alpha), a0) ==
        Series::monomial(f, w, MultiIndex::zero(2), alpha));
  // a = -(1,2) * 5: S = t^(-1,-2) sigma^{-1}(alpha)
  CHECK(op_S(mono(f, w, {-5, -10}, alpha), a0) == mono(f, w, {-1, -2}, alpha.frobenius(-1)));
}

TEST_CASE("R operator cases") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex_box(MultiIndex{60, 0}, {60, 40});
  GfElem a0 = f->alpha0();
  GfElem alpha = f->from_int(2);

  // N0 = 1: R of a constant is the empty double sum
  CHECK(op_R(Series::monomial(f, w, MultiIndex::zero(2), alpha), a0).is_zero());
  CHECK(op_R(Series(f, w), a0).is_zero());
  // m = 1 case: R(t^(-5,0) alpha) = t^(-1,0) sigma^{-1} alpha
  CHECK(op_R(mono(f, w, {-5, 0}, alpha), a0) == mono(f, w, {-1, 0}, alpha.frobenius(-1)));
  // positive part: orbit sum until the window cuts it
  Series b = mono(f, w, {2, 0}, alpha);
  Series r = op_R(b, a0);
  Series expect = -(mono(f, w, {2, 0}, alpha) + mono(f, w, {10, 0}, alpha) +
                    mono(f, w, {50, 0}, alpha));
  CHECK(r == expect);
  // telescoping makes the splitting identity hold within the window
  CHECK(b == op_S(b, a0) + (r.frobenius(1) - r));
}

TEST_CASE("unbounded window is rejected for the orbit sum") {
  const GF* f = GF::get(5, 1);
  Window w = Window::lex(MultiIndex{60, 0}); // no box: (0,y) never leaves
  GfElem a0 = f->alpha0();
  CHECK_THROWS_AS(op_R(mono(f, w, {0, 3}, f->one()), a0), std::domain_error);
}

TEST_CASE("splitting identity and projector algebra on random series") {
  for (auto [p, n0] : {std::pair<Int, int>{3, 2}, {5, 1}}) {
    const GF* f = GF::get(p, n0);
    GfElem a0 = f->alpha0();
    Window w = Window::lex_box(MultiIndex{60, 0}, {60, 40});
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<Int> e(-10, 10), c(0, f->q() - 1);
    for (int t = 0; t < 60; ++t) {
      Series b(f, w);
      for (int k = 0; k < 7; ++k) b.add_term(MultiIndex{e(rng), e(rng)}, f->element(c(rng)));
      auto [s, r] = split_check(b, a0); // asserts b = S(b) + (sigma-id)R(b)
      CHECK(op_S(s, a0) == s);          // S^2 = S
      Series pr = b - s;                // the complementary projector (sigma-id)R
      CHECK(op_S(pr, a0).is_zero());
      Series rs = op_R(s, a0);
      CHECK((rs.frobenius(1) - rs).is_zero());
      Series rr = op_R(pr, a0);
      CHECK(rr.frobenius(1) - rr == pr); // idempotence of (sigma-id)R
      // image characterization
      for (const auto& [ex, coeff] : s.terms()) {
        if (ex.is_zero()) {
          bool in_span = false;
          for (Int k = 0; k < p; ++k)
            if (coeff == a0.scaled(k)) in_span = true;
          CHECK(in_span);
        } else {
          CHECK((-ex).in_Zplus(p));
        }
      }
    }
  }
}

TEST_CASE("coefficient-wise extension to Lie series") {
  const GF* f = GF::get(5, 1);
  GfElem a0 = f->alpha0();
  Window w = Window::lex_box(MultiIndex{25, 0}, {25, 20});
  GenTable::Params tp;
  tp.p = 5;
  tp.N = 2;
  tp.n0 = 1;
  tp.cbar0 = MultiIndex{5, 0};
  tp.wt_max = 2;
  tp.box = {10, 4};
  tp.with_L = false;
  auto tab = GenTable::window(tp);

  MultiIndex a{1, 2};
  int id = tab->id_of(Gen::d(a, 0));
  // S fixes t^{-a} D_{a,0}
  LieSeries x(tab.get(), 2);
  x.add_term(Word::letter(id), Series::monomial(f, w, -a, f->one()));
  CHECK(op_S_lie(x, a0) == x);
  // S kills lex-positive coefficients
  LieSeries y(tab.get(), 2);
  y.add_term(Word::letter(id), Series::monomial(f, w, MultiIndex{1, 0}, f->one()));
  CHECK(op_S_lie(y, a0).is_zero());
  // linearity of R on random sums
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<Int> e(-6, 6), c(0, 4);
  std::uniform_int_distribution<int> gpick(0, tab->size() - 1);
  for (int t = 0; t < 20; ++t) {
    LieSeries u(tab.get(), 2), v(tab.get(), 2);
    for (int k = 0; k < 3; ++k) {
      u.add_term(Word::letter(gpick(rng)), Series::monomial(f, w, MultiIndex{e(rng), e(rng)}, f->element(c(rng))));
      v.add_term(Word::letter(gpick(rng)), Series::monomial(f, w, MultiIndex{e(rng), e(rng)}, f->element(c(rng))));
    }
    CHECK(op_R_lie(u + v, a0) == op_R_lie(u, a0) + op_R_lie(v, a0));
    // splitting identity lifts coefficient-wise
    LieSeries s = op_S_lie(u, a0);
    LieSeries r = op_R_lie(u, a0);
    CHECK(u == s + (r.sigma_act(1) - r));
  }

  // sigma-twist across the Lie factor: orbit sums over F_9
  const GF* f9 = GF::get(3, 2);
  GfElem b0 = f9->alpha0();
  GenTable::Params t9 = tp;
  t9.p = 3;
  t9.n0 = 2;
  t9.cbar0 = MultiIndex{3, 0};
  t9.box = {6, 4};
  auto tab9 = GenTable::window(t9);
  Window w9 = Window::lex_box(MultiIndex{9, 0}, {12, 12});
  MultiIndex a9{1, 1};
  LieSeries z(tab9.get(), 2);
  z.add_term(Word::letter(tab9->id_of(Gen::d(a9, 0))),
             Series::monomial(f9, w9, MultiIndex{-3, -3}, f9->gen()));
  // -(1,1)*3: S = sigma^{-1}, shifting the generator index down
  LieSeries sz = op_S_lie(z, b0);
  LieSeries expect(tab9.get(), 2);
  expect.add_term(Word::letter(tab9->id_of(Gen::d(a9, 1))),
                  Series::monomial(f9, w9, MultiIndex{-1, -1}, f9->gen().frobenius(-1)));
  CHECK(sz == expect);
}
