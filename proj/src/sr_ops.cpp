#include "nas/sr_ops.hpp"

#include <stdexcept>

namespace nas {

int orbit_steps(const MultiIndex& e, Int p, const Window& w) {
  constexpr Int kLimit = Int(1) << 50;
  MultiIndex cur = e;
  int steps = 0;
  while (w.contains(cur)) {
    ++steps;
    for (int j = 0; j < cur.dim(); ++j)
      if (cur[j] > kLimit / p || cur[j] < -(kLimit / p))
        throw std::domain_error("unsupported window: sigma-orbit of " + e.str() + " never leaves it");
    cur = cur * p;
  }
  return steps;
}

namespace {

enum class Part { S, R };

// accumulate the S- or R-part of a single term coeff * t^e into out via the
// callback add(k, prefactor): contribution prefactor * sigma^k(term)
template <class AddFn>
void sr_cases(const MultiIndex& e, Int p, int n0, const Window& w, const GfElem& alpha0, Part part,
              const AddFn& add) {
  GfElem one = alpha0.field()->one();
  if (e.lex_positive()) {
    if (part == Part::S) return;
    int steps = orbit_steps(e, p, w);
    for (int i = 0; i < steps; ++i) add(i, -one);
  } else if (e.is_zero()) {
    if (part == Part::S) {
      for (int i = 0; i < n0; ++i) add(i, alpha0);
    } else {
      for (int i = 1; i < n0; ++i)
        for (int j = 0; j < i; ++j) add(i, alpha0.frobenius(j));
    }
  } else {
    int m = (-e).p_depth(p);
    if (part == Part::S) {
      add(-m, one);
    } else {
      for (int i = 1; i <= m; ++i) add(-i, one);
    }
  }
}

Series op_series(const Series& b, const GfElem& alpha0, Part part) {
  if (b.is_unbound()) return b;
  Series r(b.field(), b.window());
  for (const auto& [e, c] : b.terms()) {
    Series term = Series::monomial(b.field(), b.window(), e, c);
    sr_cases(e, b.field()->p(), b.field()->n0(), b.window(), alpha0, part,
             [&](int k, const GfElem& pre) { r += term.frobenius(k).scaled(pre); });
  }
  return r;
}

LieSeries op_lie(const LieSeries& x, const GfElem& alpha0, Part part) {
  const GenTable* tab = x.tab();
  const GF* f = alpha0.field();
  AssocMap<Series> acc;
  for (const auto& [w, ser] : x.terms()) {
    if (ser.is_zero()) continue;
    auto expansion = lyndon_expand(w);
    for (const auto& [e, c] : ser.terms()) {
      Series term = Series::monomial(f, ser.window(), e, c);
      sr_cases(e, tab->p(), tab->n0(), ser.window(), alpha0, part, [&](int k, const GfElem& pre) {
        Series cs = term.frobenius(k).scaled(pre);
        if (cs.is_zero()) return;
        for (const auto& [word, kk] : expansion) {
          Word sw = word;
          for (int i = 0; i < sw.len; ++i) sw.g[i] = tab->sigma_shift(sw.g[i], k);
          assoc_add_term(acc, sw, cs.scaled(kk));
        }
      });
    }
  }
  return LieSeries::project(std::move(acc), tab, x.class_bound());
}

} // namespace

Series op_S(const Series& b, const GfElem& alpha0) { return op_series(b, alpha0, Part::S); }
Series op_R(const Series& b, const GfElem& alpha0) { return op_series(b, alpha0, Part::R); }

std::pair<Series, Series> split_check(const Series& b, const GfElem& alpha0) {
  Series s = op_S(b, alpha0);
  Series r = op_R(b, alpha0);
  Series residual = b - s - (r.frobenius(1) - r);
  if (!residual.is_zero())
    throw std::logic_error("splitting identity violated within window: residual " + residual.str());
  return {s, r};
}

LieSeries op_S_lie(const LieSeries& x, const GfElem& alpha0) { return op_lie(x, alpha0, Part::S); }
LieSeries op_R_lie(const LieSeries& x, const GfElem& alpha0) { return op_lie(x, alpha0, Part::R); }

} // namespace nas
