#pragma once

#include "nas/lie.hpp"

namespace nas {

// Campbell-Hausdorff group law on a Lie algebra of nilpotent class < p,
// computed through the enveloping algebra: exp, multiply, log.

inline Int inv_mod(Int a, Int p) {
  a %= p;
  if (a < 0) a += p;
  Int r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

template <class R> AssocMap<R> trunc_exp(const Lie<R>& l, int maxlen, const R& unit) {
  if (maxlen >= static_cast<int>(l.tab()->p()))
    throw std::invalid_argument("truncated exponential needs word length < p");
  AssocMap<R> x = l.to_assoc();
  AssocMap<R> r;
  assoc_add_term(r, Word(), unit);
  AssocMap<R> pw = r;
  Int kfact_inv = 1;
  const Int p = l.tab()->p();
  for (int k = 1; k <= maxlen; ++k) {
    pw = assoc_mul(pw, x, maxlen);
    if (pw.empty()) break;
    kfact_inv = (kfact_inv * inv_mod(k, p)) % p;
    assoc_add(r, assoc_scaled(pw, kfact_inv));
  }
  return r;
}

template <class R>
Lie<R> trunc_log(const AssocMap<R>& u, const GenTable* tab, int maxlen, int class_bound) {
  auto it = u.find(Word());
  if (it == u.end() || !(it->second == unit_like(it->second)))
    throw std::domain_error("trunc_log requires constant term 1");
  AssocMap<R> y = u;
  y.erase(Word());
  AssocMap<R> pw;
  assoc_add_term(pw, Word(), unit_like(it->second));
  AssocMap<R> acc;
  const Int p = tab->p();
  for (int k = 1; k <= maxlen; ++k) {
    pw = assoc_mul(pw, y, maxlen);
    if (pw.empty()) break;
    Int c = inv_mod(k, p);
    if (k % 2 == 0) c = p - c;
    assoc_add(acc, assoc_scaled(pw, c));
  }
  return Lie<R>::project(std::move(acc), tab, class_bound);
}

// l1 o l2 = log(exp(l1) exp(l2)) mod C_{c+1}
template <class R> Lie<R> ch_compose(const Lie<R>& l1, const Lie<R>& l2) {
  if (l1.tab() != l2.tab() || l1.class_bound() != l2.class_bound())
    throw std::invalid_argument("universe or class bound mismatch");
  if (l1.is_zero()) return l2;
  if (l2.is_zero()) return l1;
  const int c = l1.class_bound();
  R unit = unit_like(l1.terms().begin()->second);
  AssocMap<R> prod = assoc_mul(trunc_exp(l1, c, unit), trunc_exp(l2, c, unit), c);
  return trunc_log(prod, l1.tab(), c, c);
}

template <class R> Lie<R> ch_inverse(const Lie<R>& l) { return -l; }

// Ad l: x -> (-l) o x o l
template <class R> Lie<R> adjoint(const Lie<R>& l, const Lie<R>& x) {
  return ch_compose(ch_compose(ch_inverse(l), x), l);
}

} // namespace nas
