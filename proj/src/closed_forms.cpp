#include "nas/closed_forms.hpp"

#include <cstdlib>

namespace nas {

namespace {

Int abs_bound(const GenTable* tab, const MultiIndex& extra) {
  Int b = 1;
  for (const auto& a : tab->d_indices())
    for (int j = 0; j < a.dim(); ++j) b = std::max<Int>(b, a[j] < 0 ? -a[j] : a[j]);
  for (int j = 0; j < extra.dim(); ++j) b = std::max<Int>(b, extra[j] < 0 ? -extra[j] : extra[j]);
  return b;
}

// add c * [D_{a1,n1}, D_{a2,n2}] if both indices are in the window
void add_pair(LieElt& out, const GenTable* tab, const MultiIndex& a1, int n1, const MultiIndex& a2,
              int n2, const GfElem& c) {
  if (c.is_zero()) return;
  int i1 = tab->find(Gen::d(a1, n1));
  int i2 = tab->find(Gen::d(a2, n2));
  if (i1 < 0 || i2 < 0) return;
  if (i1 == i2) return;
  Word w;
  w.len = 2;
  if (i1 < i2) {
    w.g[0] = i1;
    w.g[1] = i2;
    out.add_term(w, c);
  } else {
    w.g[0] = i2;
    w.g[1] = i1;
    out.add_term(w, -c);
  }
}

} // namespace

LieElt closed_form_V0(int m, const ClosedFormParams& q, const GenTable* tab) {
  const Int p = tab->p();
  const int n0 = tab->n0();
  LieElt out(tab, q.class_bound);
  for (const auto& [iota, A_i] : q.A) {
    MultiIndex target = q.cbar0 + iota * p;
    for (const auto& a1 : tab->d_indices()) {
      MultiIndex a2 = target - a1;
      if (!a2.in_Zplus(p)) continue;
      Int am = a1[m - 1] % p;
      if (am == 0) continue;
      const Int half = (p + 1) / 2; // 1/2 mod p
      for (int n = 0; n < n0; ++n) {
        GfElem c = A_i.frobenius(n).scaled(-am * half);
        add_pair(out, tab, a1, n, a2, n, c);
      }
    }
  }
  return out;
}

LieElt closed_form_Va(int m, const MultiIndex& a, const ClosedFormParams& q, const GenTable* tab) {
  const Int p = tab->p();
  const int n0 = tab->n0();
  LieElt out(tab, q.class_bound);
  const Int half = (p + 1) / 2;
  const Int diam = 4 * abs_bound(tab, q.cbar0 + a) + 4;

  for (const auto& [iota, A_i] : q.A) {
    // linear elimination term
    {
      MultiIndex b = q.cbar0 + iota * p + a;
      int id = tab->find(Gen::d(b, 0));
      if (id >= 0) {
        Int am = a[m - 1] % p;
        out.add_term(Word::letter(id), A_i.scaled(-am));
      }
    }
    // sigma^n sum, n >= 1: pairs a1 + a2/p^n = cbar0 + p iota + a/p^n,
    // i.e. a2 = a + p^n (cbar0 + p iota - a1); term -sigma^n(A) a1^{(m)} [D_{a1,n}, D_{a2,0}]
    Int pn = p;
    for (int n = 1; pn <= diam; ++n, pn *= p) {
      for (const auto& a1 : tab->d_indices()) {
        MultiIndex a2 = a + (q.cbar0 + iota * p - a1) * pn;
        if (!a2.in_Zplus(p)) continue;
        Int am = a1[m - 1] % p;
        if (am == 0) continue;
        add_pair(out, tab, a1, n % n0, a2, 0, A_i.frobenius(n).scaled(-am));
      }
    }
    // sigma^{-n} sum, n >= 0: pairs a1 + a2 = cbar0 + p iota + a p^n;
    // term -1/2 sigma^{-n}(A) a1^{(m)} [D_{a1,0}, D_{a2,0}] twisted by sigma^{-n}
    pn = 1;
    for (int n = 0; pn <= diam; ++n, pn *= p) {
      MultiIndex target = q.cbar0 + iota * p + a * pn;
      for (const auto& a1 : tab->d_indices()) {
        MultiIndex a2 = target - a1;
        if (!a2.in_Zplus(p)) continue;
        Int am = a1[m - 1] % p;
        if (am == 0) continue;
        int nn = ((-n) % n0 + n0) % n0;
        add_pair(out, tab, a1, nn, a2, nn, A_i.frobenius(-n).scaled(-am * half));
      }
    }
  }
  return out;
}

LieElt reduce_mod_C3_extended(const LieElt& x, const MultiIndex& cbar0) {
  const GenTable* tab = x.tab();
  LieElt r(tab, x.class_bound());
  MultiIndex two_c = cbar0 * 2;
  for (const auto& [w, c] : x.terms()) {
    if (w.len >= 3) continue;
    bool keep = true;
    for (int i = 0; i < w.len; ++i) {
      const Gen& g = tab->gen(w.g[i]);
      if (g.kind != Gen::Kind::D) continue;
      if (w.len >= 2 && g.a >= cbar0) keep = false;
      if (w.len == 1 && g.a >= two_c) keep = false;
    }
    if (keep) r.add_term(w, c);
  }
  return r;
}

} // namespace nas
