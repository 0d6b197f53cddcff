#include "nas/series.hpp"

#include <sstream>
#include <stdexcept>

namespace nas {

Window Window::unbounded(int n) {
  Window w;
  w.n_ = n;
  w.box_.resize(n);
  return w;
}

Window Window::lex(MultiIndex cut) {
  Window w = unbounded(cut.dim());
  w.lex_cut_ = std::move(cut);
  return w;
}

Window Window::lex_box(MultiIndex cut, std::vector<Int> box) {
  Window w = lex(std::move(cut));
  if (static_cast<int>(box.size()) != w.n_) throw std::invalid_argument("box dimension mismatch");
  for (int j = 0; j < w.n_; ++j) w.box_[j] = box[j];
  return w;
}

bool Window::contains(const MultiIndex& e) const {
  if (lex_cut_ && !(e < *lex_cut_)) return false;
  for (int j = 0; j < n_; ++j)
    if (box_[j] && e[j] > *box_[j]) return false;
  return true;
}

Window Window::meet(const Window& o) const {
  if (n_ != o.n_) throw std::invalid_argument("window dimension mismatch");
  Window w = unbounded(n_);
  if (lex_cut_ && o.lex_cut_)
    w.lex_cut_ = std::min(*lex_cut_, *o.lex_cut_);
  else if (lex_cut_)
    w.lex_cut_ = lex_cut_;
  else
    w.lex_cut_ = o.lex_cut_;
  for (int j = 0; j < n_; ++j) {
    if (box_[j] && o.box_[j])
      w.box_[j] = std::min(*box_[j], *o.box_[j]);
    else if (box_[j])
      w.box_[j] = box_[j];
    else
      w.box_[j] = o.box_[j];
  }
  return w;
}

Window Window::translated(const MultiIndex& d) const {
  Window w = *this;
  if (w.lex_cut_) w.lex_cut_ = *w.lex_cut_ + d;
  for (int j = 0; j < n_; ++j)
    if (w.box_[j]) w.box_[j] = *w.box_[j] + d[j];
  return w;
}

bool Window::operator==(const Window& o) const {
  return n_ == o.n_ && lex_cut_ == o.lex_cut_ && box_ == o.box_;
}

std::string Window::str() const {
  std::ostringstream os;
  os << "lex<" << (lex_cut_ ? lex_cut_->str() : std::string("inf"));
  os << " box";
  for (int j = 0; j < n_; ++j) {
    os << (j ? "," : "(");
    if (box_[j])
      os << *box_[j];
    else
      os << "inf";
  }
  os << ")";
  return os.str();
}

Series Series::one(const GF* f, const Window& w) {
  return monomial(f, w, MultiIndex::zero(w.dim()), f->one());
}

Series Series::monomial(const GF* f, const Window& w, const MultiIndex& e, const GfElem& c) {
  Series s(f, w);
  s.add_term(e, c);
  return s;
}

GfElem Series::coeff(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? (f_ ? f_->zero() : GfElem()) : it->second;
}

void Series::add_term(const MultiIndex& e, const GfElem& c) {
  if (c.is_zero() || !win_.contains(e)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiIndex Series::lex_min_exponent() const {
  if (terms_.empty()) throw std::domain_error("lex_min_exponent of zero series");
  return terms_.begin()->first;
}

void Series::check_compat(const Series& a, const Series& b) {
  if (a.f_ && b.f_ && a.f_ != b.f_) throw std::invalid_argument("mismatched field parameters");
}

Series Series::operator+(const Series& o) const {
  check_compat(*this, o);
  if (is_unbound()) return o;
  if (o.is_unbound()) return *this;
  Series r(f_, win_.meet(o.win_));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
  Series r(f_, win_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Series Series::operator*(const Series& o) const {
  check_compat(*this, o);
  if (is_unbound() || o.is_unbound()) return Series();
  Series r(f_, win_.meet(o.win_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Series Series::scaled(Int k) const {
  Series r(f_, win_);
  for (const auto& [e, c] : terms_) {
    GfElem x = c.scaled(k);
    if (!x.is_zero()) r.terms_.emplace(e, x);
  }
  return r;
}

Series Series::scaled(const GfElem& c) const {
  Series r(f_, win_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) {
    GfElem y = x * c;
    if (!y.is_zero()) r.terms_.emplace(e, y);
  }
  return r;
}

Series Series::shifted(const MultiIndex& e) const {
  Series r(f_, win_);
  for (const auto& [e1, c] : terms_) r.add_term(e1 + e, c);
  return r;
}

Series Series::truncated(const Window& w) const {
  Series r(f_, win_.meet(w));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

Series Series::inverted() const {
  if (is_unbound() || is_zero()) throw std::domain_error("series not invertible");
  MultiIndex a = lex_min_exponent();
  GfElem c = terms_.begin()->second;
  // x = c t^a (1 + m), m supported on lex-positive exponents. The result
  // needs accuracy in win_, so the geometric series runs in win_ + a.
  Window wa = win_.translated(a);
  Series m(f_, wa);
  for (const auto& [e, x] : terms_)
    if (!(e == a)) m.add_term(e - a, x * c.inv());
  Series geo = one(f_, wa);
  Series term = one(f_, wa);
  for (int guard = 0;; ++guard) {
    term = term * m;
    term = -term;
    if (term.is_zero()) break;
    geo = geo + term;
    if (guard > 100000) throw std::domain_error("series inversion does not terminate in this window");
  }
  Series r(f_, win_);
  GfElem cinv = c.inv();
  for (const auto& [e, x] : geo.terms()) r.add_term(e - a, x * cinv);
  return r;
}

Series Series::pow(Int n) const {
  if (n < 0) return inverted().pow(-n);
  Series r = one(f_, win_);
  Series b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Series Series::frobenius(int n) const {
  if (is_unbound() || n == 0) return *this;
  Series r(f_, win_);
  if (n > 0) {
    Int pn = 1;
    for (int i = 0; i < n; ++i) pn *= f_->p();
    for (const auto& [e, c] : terms_) r.add_term(e * pn, c.frobenius(n));
  } else {
    Int pn = 1;
    for (int i = 0; i < -n; ++i) pn *= f_->p();
    for (const auto& [e, c] : terms_) {
      if (!e.divisible_by(pn))
        throw std::domain_error("sigma^{-1} on series requires exponents divisible by p");
      r.add_term(e.divided_by(pn), c.frobenius(n));
    }
  }
  return r;
}

bool Series::operator==(const Series& o) const {
  if (is_unbound()) return o.is_zero();
  if (o.is_unbound()) return is_zero();
  return f_ == o.f_ && terms_ == o.terms_;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")t^" << e.str();
  }
  return os.str();
}

void Omega::validate(const GF* f) const {
  if (cbar0.dim() == 0) throw std::invalid_argument("omega: empty cbar0");
  if (!cbar0.divisible_by(p) || cbar0[0] <= 0)
    throw std::invalid_argument("omega: cbar0 must lie in pZ^N with first component > 0");
  auto it = beta.find(MultiIndex::zero(cbar0.dim()));
  if (it == beta.end() || it->second.is_zero()) throw std::invalid_argument("omega: beta_0 must be nonzero");
  for (const auto& [iota, b] : beta) {
    for (int j = 0; j < iota.dim(); ++j)
      if (iota[j] < 0) throw std::invalid_argument("omega: iota must be componentwise >= 0");
    if (b.field() && b.field() != f) throw std::invalid_argument("omega: coefficient field mismatch");
  }
}

Series Omega::series(const GF* f, const Window& w) const {
  Series s(f, w);
  MultiIndex base = cbar0_over_p();
  for (const auto& [iota, b] : beta) s.add_term(base + iota, b);
  return s;
}

Series Omega::series_p(const GF* f, const Window& w) const {
  // char p: (sum beta t^{c/p+iota})^p = sum beta^p t^{c+p iota}
  Series s(f, w);
  for (const auto& [iota, b] : beta) s.add_term(cbar0 + iota * p, b.frobenius(1));
  return s;
}

Series artin_hasse(const Series& x) {
  const GF* f = x.field();
  if (!f) throw std::domain_error("artin_hasse of unbound series");
  const Window& w = x.window();
  if (x.is_zero()) return Series::one(f, w);
  MultiIndex lo = x.lex_min_exponent();
  if (!lo.lex_positive()) throw std::domain_error("artin_hasse requires lex-positive support");
  if (!w.has_lex_cut() || !(w.lex_cut() <= lo * f->p()))
    throw std::domain_error("unsupported window: wider than p * lex-min exponent of the argument");
  Series r = Series::one(f, w);
  Series term = Series::one(f, w);
  Int kfact_inv = 1;
  for (Int k = 1; k < f->p(); ++k) {
    term = term * x;
    if (term.is_zero()) break;
    // 1/k! mod p
    GfElem invk = f->from_int(k).inv();
    kfact_inv = (kfact_inv * invk.coord(0)) % f->p();
    r = r + term.scaled(kfact_inv);
  }
  return r;
}

Series apply_h(int m, const Omega& omega, const Series& x) {
  const GF* f = x.field();
  if (!f) return x;
  omega.validate(f);
  if (m < 1 || m > x.nvars()) throw std::invalid_argument("apply_h: m out of range");
  const Window& w = x.window();
  Series E = artin_hasse(omega.series_p(f, w));
  std::map<Int, Series> powers;
  powers[0] = Series::one(f, w);
  Series r(f, w);
  for (const auto& [e, c] : x.terms()) {
    Int n = e[m - 1];
    auto it = powers.find(n);
    if (it == powers.end()) it = powers.emplace(n, E.pow(n)).first;
    r = r + it->second.scaled(c).shifted(e);
  }
  return r;
}

std::map<MultiIndex, GfElem> omega_A_coeffs(const Omega& omega, const GF* f, const Window& w) {
  omega.validate(f);
  Series E = artin_hasse(omega.series_p(f, w));
  std::map<MultiIndex, GfElem> A;
  for (const auto& [e, c] : E.terms()) {
    if (e.is_zero()) continue; // the leading 1
    MultiIndex d = e - omega.cbar0;
    MultiIndex iota = d.divided_by(omega.p);
    for (int j = 0; j < iota.dim(); ++j)
      if (iota[j] < 0) throw std::logic_error("A-coefficient at unexpected exponent " + e.str());
    A.emplace(iota, c);
  }
  return A;
}

} // namespace nas
