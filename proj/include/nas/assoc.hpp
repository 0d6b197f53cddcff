#pragma once

#include <map>
#include <vector>

#include "nas/gf.hpp"
#include "nas/parallel.hpp"
#include "nas/series.hpp"
#include "nas/word.hpp"

namespace nas {

// Elements of the enveloping algebra mod J^{maxlen+1}, represented as
// sparse word -> coefficient maps (empty word = constant term).
template <class R> using AssocMap = std::map<Word, R>;

inline GfElem unit_like(const GfElem& c) { return c.field()->one(); }
inline Series unit_like(const Series& s) { return Series::one(s.field(), s.window()); }

inline GfElem scale_coeff(const GfElem& a, const GfElem& b) { return a * b; }
inline Series scale_coeff(const Series& a, const GfElem& b) { return a.scaled(b); }
inline Series scale_coeff(const Series& a, const Series& b) { return a * b; }

template <class R> void assoc_add_term(AssocMap<R>& m, const Word& w, const R& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

template <class R> void assoc_add(AssocMap<R>& m, const AssocMap<R>& o) {
  for (const auto& [w, c] : o) assoc_add_term(m, w, c);
}

template <class R>
AssocMap<R> assoc_mul_serial(const AssocMap<R>& a, const AssocMap<R>& b, int maxlen) {
  AssocMap<R> r;
  for (const auto& [wa, ca] : a) {
    if (wa.len > maxlen) continue;
    for (const auto& [wb, cb] : b) {
      if (wa.len + wb.len > maxlen) continue;
      assoc_add_term(r, Word::concat(wa, wb), ca * cb);
    }
  }
  return r;
}

// OpenMP kernel: partition the left factor, merge thread-local maps.
template <class R>
AssocMap<R> assoc_mul(const AssocMap<R>& a, const AssocMap<R>& b, int maxlen) {
  if (!parallel_enabled() || a.size() * b.size() < 4096) return assoc_mul_serial(a, b, maxlen);
  std::vector<const std::pair<const Word, R>*> lhs;
  lhs.reserve(a.size());
  for (const auto& t : a) lhs.push_back(&t);
  int nt = omp_get_max_threads();
  std::vector<AssocMap<R>> local(nt);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(lhs.size()); ++i) {
    AssocMap<R>& out = local[omp_get_thread_num()];
    const auto& [wa, ca] = *lhs[i];
    if (wa.len > maxlen) continue;
    for (const auto& [wb, cb] : b) {
      if (wa.len + wb.len > maxlen) continue;
      assoc_add_term(out, Word::concat(wa, wb), ca * cb);
    }
  }
  AssocMap<R> r;
  for (auto& m : local) assoc_add(r, m);
  return r;
}

template <class R> AssocMap<R> assoc_scaled(const AssocMap<R>& a, Int k) {
  AssocMap<R> r;
  for (const auto& [w, c] : a) assoc_add_term(r, w, c.scaled(k));
  return r;
}

template <class R> AssocMap<R> assoc_neg(const AssocMap<R>& a) {
  AssocMap<R> r;
  for (const auto& [w, c] : a) r.emplace(w, -c);
  return r;
}

} // namespace nas
