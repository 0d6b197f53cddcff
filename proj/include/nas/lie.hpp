#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nas/assoc.hpp"
#include "nas/gen.hpp"
#include "nas/lyndon.hpp"

namespace nas {

// Element of the free nilpotent Lie algebra of class `class_bound` on the
// universe `tab`, in Lyndon normal form. R is the coefficient ring: GfElem
// for elements over k, Series for elements over the windowed Laurent ring.
template <class R> class Lie {
public:
  Lie() : tab_(nullptr), c_(0) {} // unbound; assign before use
  Lie(const GenTable* tab, int class_bound) : tab_(tab), c_(class_bound) {
    if (class_bound < 1 || class_bound >= static_cast<int>(tab->p()))
      throw std::invalid_argument("class bound must satisfy 1 <= c <= p-1");
  }
  static Lie zero(const GenTable* tab, int c) { return Lie(tab, c); }
  static Lie generator(const GenTable* tab, int c, int id, const R& coeff) {
    Lie l(tab, c);
    l.add_term(Word::letter(id), coeff);
    return l;
  }

  const GenTable* tab() const { return tab_; }
  int class_bound() const { return c_; }
  const std::map<Word, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // w must be a Lyndon word of length <= class bound
  void add_term(const Word& w, const R& c) {
    if (!tab_) throw std::logic_error("unbound Lie element");
    if (w.len > c_ || c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  R coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? R() : it->second;
  }

  Lie operator+(const Lie& o) const {
    check(o);
    Lie r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }
  Lie operator-(const Lie& o) const { return *this + (-o); }
  Lie operator-() const {
    Lie r(tab_, c_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  Lie& operator+=(const Lie& o) { return *this = *this + o; }

  Lie scaled(Int k) const {
    Lie r(tab_, c_);
    for (const auto& [w, c] : terms_) r.add_term(w, c.scaled(k));
    return r;
  }
  template <class S> Lie scaled_by(const S& s) const {
    Lie r(tab_, c_);
    for (const auto& [w, c] : terms_) r.add_term(w, scale_coeff(c, s));
    return r;
  }

  bool operator==(const Lie& o) const { return terms_ == o.terms_; }
  bool operator!=(const Lie& o) const { return !(*this == o); }

  AssocMap<R> to_assoc() const {
    AssocMap<R> m;
    for (const auto& [w, c] : terms_)
      for (const auto& [word, k] : lyndon_expand(w)) assoc_add_term(m, word, c.scaled(k));
    return m;
  }

  // triangular reduction of a Lie element in associative form back to the
  // Lyndon basis; throws if the input is not a Lie element
  static Lie project(AssocMap<R> m, const GenTable* tab, int class_bound) {
    Lie out(tab, class_bound);
    for (auto it = m.begin(); it != m.end();) {
      if (it->first.len > class_bound) {
        it = m.erase(it);
        continue;
      }
      Word w = it->first;
      R c = it->second;
      if (!is_lyndon(w)) throw std::domain_error("not a Lie element (leading word " + w.str() + ")");
      out.add_term(w, c);
      for (const auto& [word, k] : lyndon_expand(w)) assoc_add_term(m, word, c.scaled(-k));
      it = m.begin();
    }
    return out;
  }

  Lie bracket(const Lie& o) const {
    check(o);
    AssocMap<R> a = to_assoc();
    AssocMap<R> b = o.to_assoc();
    AssocMap<R> ab = assoc_mul(a, b, c_);
    AssocMap<R> ba = assoc_mul(b, a, c_);
    assoc_add(ab, assoc_neg(ba));
    return project(std::move(ab), tab_, c_);
  }

  // sigma^n: D(a,m) -> D(a,m+n), coefficients through their own Frobenius
  // (full Frobenius for Series: exponents scale by p^n as well)
  Lie sigma_act(int n) const {
    if (n == 0) return *this;
    AssocMap<R> m;
    for (const auto& [w, c] : terms_) {
      R cs = c.frobenius(n);
      for (const auto& [word, k] : lyndon_expand(w)) {
        Word sw = word;
        for (int i = 0; i < sw.len; ++i) sw.g[i] = tab_->sigma_shift(sw.g[i], n);
        assoc_add_term(m, sw, cs.scaled(k));
      }
    }
    return project(std::move(m), tab_, c_);
  }

  int word_weight(const Word& w) const {
    int s = 0;
    for (int i = 0; i < w.len; ++i) s += tab_->weight(w.g[i]);
    return s;
  }

  // quotient by the ideal of total weight >= s
  Lie reduce_mod_weight(int s) const {
    Lie r(tab_, c_);
    for (const auto& [w, c] : terms_)
      if (word_weight(w) < s) r.terms_.emplace(w, c);
    return r;
  }
  // quotient by C_s: drop bracket depth >= s
  Lie reduce_mod_depth(int s) const {
    Lie r(tab_, c_);
    for (const auto& [w, c] : terms_)
      if (w.len < s) r.terms_.emplace(w, c);
    return r;
  }
  Lie depth_part(int d) const {
    Lie r(tab_, c_);
    for (const auto& [w, c] : terms_)
      if (w.len == d) r.terms_.emplace(w, c);
    return r;
  }
  int min_depth() const { // 0 if zero
    return terms_.empty() ? 0 : terms_.begin()->first.len;
  }

  Lie with_class(int c) const {
    Lie r(tab_, c);
    for (const auto& [w, x] : terms_) r.add_term(w, x);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")*";
      print_word(os, w);
    }
    return os.str();
  }

private:
  void check(const Lie& o) const {
    if (tab_ != o.tab_ || c_ != o.c_) throw std::invalid_argument("universe or class bound mismatch");
  }
  void print_word(std::ostringstream& os, const Word& w) const {
    if (w.len == 1) {
      os << tab_->gen(w.g[0]).str();
      return;
    }
    auto [u, v] = std_factorization(w);
    os << "[";
    print_word(os, u);
    os << ",";
    print_word(os, v);
    os << "]";
  }

  const GenTable* tab_;
  int c_;
  std::map<Word, R> terms_;
};

using LieElt = Lie<GfElem>;
using LieSeries = Lie<Series>;

// constant-coefficient element viewed over the Laurent ring
inline LieSeries promote(const LieElt& x, const GF* f, const Window& w) {
  LieSeries r(x.tab(), x.class_bound());
  for (const auto& [word, c] : x.terms())
    r.add_term(word, Series::monomial(f, w, MultiIndex::zero(w.dim()), c));
  return r;
}

// Lie-algebra homomorphism determined by generator images (as associative
// expansions of Lie elements): [g1...gk] -> product of images, reprojected.
template <class R>
Lie<R> apply_hom(const Lie<R>& x, const std::function<AssocMap<R>(int)>& image_assoc) {
  AssocMap<R> out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [word, k] : lyndon_expand(w)) {
      AssocMap<R> prod;
      assoc_add_term(prod, Word(), unit_like(c));
      for (int i = 0; i < word.len; ++i)
        prod = assoc_mul(prod, image_assoc(word.g[i]), x.class_bound());
      R ck = c.scaled(k);
      for (const auto& [pw, pc] : prod) assoc_add_term(out, pw, pc * ck);
    }
  }
  return Lie<R>::project(std::move(out), x.tab(), x.class_bound());
}

// derivation determined by generator images: der([u,v]) = [der u, v] + [u, der v]
template <class R>
Lie<R> apply_derivation(const Lie<R>& x, const std::function<Lie<R>(int)>& image) {
  const GenTable* tab = x.tab();
  const int c = x.class_bound();
  std::function<Lie<R>(const Word&, const R&)> der_mono = [&](const Word& w, const R& unit) -> Lie<R> {
    if (w.len == 1) return image(w.g[0]);
    auto [u, v] = std_factorization(w);
    Lie<R> lu = Lie<R>::zero(tab, c);
    lu.add_term(u, unit);
    Lie<R> lv = Lie<R>::zero(tab, c);
    lv.add_term(v, unit);
    return der_mono(u, unit).bracket(lv) + lu.bracket(der_mono(v, unit));
  };
  Lie<R> out(tab, c);
  for (const auto& [w, coeff] : x.terms()) out += der_mono(w, unit_like(coeff)).scaled_by(coeff);
  return out;
}

} // namespace nas
