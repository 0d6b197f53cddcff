#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nas/ch.hpp"

using namespace nas;

namespace {

std::shared_ptr<const GenTable> table(Int p, int wt_max, Int box2) {
  GenTable::Params tp;
  tp.p = p;
  tp.N = 2;
  tp.n0 = 1;
  tp.cbar0 = MultiIndex{p, 0};
  tp.wt_max = wt_max;
  tp.box = {wt_max * p, box2};
  tp.with_L = false;
  return GenTable::window(tp);
}

LieElt rnd(std::mt19937_64& rng, const GenTable* tab, const GF* f, int cls, int nterms,
           int max_depth) {
  LieElt x(tab, cls);
  std::uniform_int_distribution<int> gen(0, tab->size() - 1);
  std::uniform_int_distribution<int> d(1, max_depth);
  std::uniform_int_distribution<Int> c(1, f->q() - 1);
  for (int t = 0; t < nterms; ++t) {
    LieElt m = LieElt::generator(tab, cls, gen(rng), f->element(c(rng)));
    int depth = d(rng);
    for (int i = 1; i < depth; ++i) m = m.bracket(LieElt::generator(tab, cls, gen(rng), f->one()));
    x += m;
  }
  return x;
}

} // namespace

TEST_CASE("class-2 composition is l1 + l2 + [l1,l2]/2") {
  const GF* f = GF::get(5, 1);
  auto tab = table(5, 2, 2);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    LieElt l1 = rnd(rng, tab.get(), f, 2, 3, 1);
    LieElt l2 = rnd(rng, tab.get(), f, 2, 3, 1);
    LieElt expect = l1 + l2 + l1.bracket(l2).scaled(inv_mod(2, 5));
    CHECK(ch_compose(l1, l2) == expect);
  }
}

TEST_CASE("depth-3 literal formula as an independent oracle") {
  // l1 o l2 = l1 + l2 + [l1,l2]/2 + [l1,[l1,l2]]/12 + [l2,[l2,l1]]/12 mod C4
  for (Int p : {Int(5), Int(7)}) {
    const GF* f = GF::get(p, 1);
    auto tab = table(p, 2, 2);
    std::mt19937_64 rng(43 + p);
    Int inv2 = inv_mod(2, p), inv12 = inv_mod(12, p);
    for (int t = 0; t < 25; ++t) {
      LieElt l1 = rnd(rng, tab.get(), f, 3, 3, 2);
      LieElt l2 = rnd(rng, tab.get(), f, 3, 3, 2);
      LieElt b = l1.bracket(l2);
      LieElt expect = l1 + l2 + b.scaled(inv2) + l1.bracket(b.scaled(inv12)) +
                      l2.bracket(b.scaled(-inv12));
      CHECK(ch_compose(l1, l2) == expect);
    }
  }
}

TEST_CASE("group structure") {
  const GF* f = GF::get(5, 1);
  auto tab = table(5, 3, 2);
  std::mt19937_64 rng(47);
  for (int cls : {2, 3, 4}) {
    for (int t = 0; t < 12; ++t) {
      LieElt l1 = rnd(rng, tab.get(), f, cls, 3, cls);
      LieElt l2 = rnd(rng, tab.get(), f, cls, 3, cls);
      LieElt l3 = rnd(rng, tab.get(), f, cls, 2, cls);
      CHECK(ch_compose(ch_compose(l1, l2), l3) == ch_compose(l1, ch_compose(l2, l3)));
      CHECK(ch_compose(l1, ch_inverse(l1)).is_zero());
      CHECK(ch_compose(ch_inverse(l1), ch_compose(l1, l2)) == l2);
    }
  }
}

TEST_CASE("trunc_exp and trunc_log are mutually inverse") {
  const GF* f = GF::get(5, 1);
  auto tab = table(5, 2, 2);
  std::mt19937_64 rng(53);
  GfElem unit = f->one();
  for (int t = 0; t < 30; ++t) {
    LieElt l = rnd(rng, tab.get(), f, 4, 4, 3);
    AssocMap<GfElem> e = trunc_exp(l, 4, unit);
    CHECK(trunc_log(e, tab.get(), 4, 4) == l);
  }
  // exp(0) = 1
  AssocMap<GfElem> one;
  assoc_add_term(one, Word(), unit);
  CHECK(trunc_exp(LieElt(tab.get(), 4), 4, unit) == one);
  // log needs constant term 1
  AssocMap<GfElem> bad;
  assoc_add_term(bad, Word(), f->from_int(2));
  CHECK_THROWS_AS(trunc_log(bad, tab.get(), 4, 4), std::domain_error);
}

TEST_CASE("adjoint action") {
  const GF* f = GF::get(7, 1);
  auto tab = table(7, 2, 1);
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    LieElt l = rnd(rng, tab.get(), f, 3, 3, 2);
    LieElt x = rnd(rng, tab.get(), f, 3, 3, 2);
    LieElt y = rnd(rng, tab.get(), f, 3, 2, 2);
    CHECK(adjoint(LieElt(tab.get(), 3), x) == x);
    CHECK(adjoint(l, adjoint(ch_inverse(l), x)) == x);
    // Lie automorphism
    CHECK(adjoint(l, x.bracket(y)) == adjoint(l, x).bracket(adjoint(l, y)));
    // class 2: Ad l(x) = x + [x, l]
    LieElt x2 = rnd(rng, tab.get(), f, 2, 3, 1);
    LieElt l2 = rnd(rng, tab.get(), f, 2, 3, 1);
    CHECK(adjoint(l2, x2) == x2 + x2.bracket(l2));
  }
}

TEST_CASE("class bound >= p is rejected") {
  auto tab = table(5, 1, 1);
  CHECK_THROWS_AS(LieElt(tab.get(), 5), std::invalid_argument);
}
