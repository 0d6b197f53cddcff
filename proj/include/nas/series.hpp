#pragma once

#include <map>
#include <optional>
#include <string>

#include "nas/gf.hpp"
#include "nas/multi_index.hpp"

namespace nas {

// Truncation window: a term t^e is kept iff e <lex lex_cut (when set) and
// e_j <= box_j for every component with a box bound. This is the open-set
// shape of the P-topology with constant per-component bounds.
class Window {
public:
  Window() = default;
  static Window unbounded(int n);
  static Window lex(MultiIndex cut);
  static Window lex_box(MultiIndex cut, std::vector<Int> box);

  int dim() const { return n_; }
  bool contains(const MultiIndex& e) const;
  Window meet(const Window& o) const;        // tighter of the two cutoffs
  Window translated(const MultiIndex& d) const; // cutoffs shifted by d
  bool has_lex_cut() const { return lex_cut_.has_value(); }
  const MultiIndex& lex_cut() const { return *lex_cut_; }
  bool has_box(int j) const { return box_[j].has_value(); }
  Int box(int j) const { return *box_[j]; }

  bool operator==(const Window& o) const;
  std::string str() const;

private:
  int n_ = 0;
  std::optional<MultiIndex> lex_cut_;
  std::vector<std::optional<Int>> box_;
};

// Finite-support N-variable Laurent series over k, truncated to a window.
class Series {
public:
  Series() = default; // unbound zero
  Series(const GF* f, Window w) : f_(f), win_(std::move(w)) {}
  static Series zero(const GF* f, const Window& w) { return Series(f, w); }
  static Series one(const GF* f, const Window& w);
  static Series monomial(const GF* f, const Window& w, const MultiIndex& e, const GfElem& c);

  const GF* field() const { return f_; }
  const Window& window() const { return win_; }
  int nvars() const { return win_.dim(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_unbound() const { return f_ == nullptr; }
  const std::map<MultiIndex, GfElem>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  GfElem coeff(const MultiIndex& e) const;
  void add_term(const MultiIndex& e, const GfElem& c); // accumulates, truncates
  MultiIndex lex_min_exponent() const;                 // requires nonzero

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series scaled(Int k) const;
  Series scaled(const GfElem& c) const;
  Series shifted(const MultiIndex& e) const; // multiply by t^e
  Series truncated(const Window& w) const;

  // multiplicative inverse; requires a nonzero lex-minimal unit term
  Series inverted() const;
  Series pow(Int n) const;

  // full Frobenius sigma^n: coefficients -> coefficients^{p^n}, exponents -> p^n * e.
  // Negative n requires all exponents divisible by p^{|n|}.
  Series frobenius(int n) const;

  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }
  std::string str() const;

private:
  const GF* f_ = nullptr;
  Window win_;
  std::map<MultiIndex, GfElem> terms_;

  static void check_compat(const Series& a, const Series& b);
};

// omega = sum_{iota >= 0 componentwise} beta_iota t^{cbar0/p + iota},
// beta_0 != 0, cbar0 in pZ^N with first component > 0.
struct Omega {
  Int p = 0;
  MultiIndex cbar0;                      // in pZ^N
  std::map<MultiIndex, GfElem> beta;     // iota -> beta_iota

  void validate(const GF* f) const;
  MultiIndex cbar0_over_p() const { return cbar0.divided_by(p); }
  Series series(const GF* f, const Window& w) const;   // omega itself
  Series series_p(const GF* f, const Window& w) const; // omega^p = sum beta^p t^{cbar0+p iota}
};

// Artin-Hasse exponential E(x), evaluated as the truncated exponential
// sum_{k<p} x^k/k!. Requires lex-positive support and a window no wider
// than p * (lex-min exponent of x).
Series artin_hasse(const Series& x);

// Substitution automorphism h_omega^{(m)}: t_m -> t_m E(omega^p), t_j -> t_j.
Series apply_h(int m, const Omega& omega, const Series& x);

// The coefficients A_iota with E(omega^p) = 1 + sum A_iota t^{cbar0 + p iota},
// read off within the window.
std::map<MultiIndex, GfElem> omega_A_coeffs(const Omega& omega, const GF* f, const Window& w);

} // namespace nas
