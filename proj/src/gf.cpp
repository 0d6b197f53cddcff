#include "nas/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nas {

namespace {

Int mod_p(Int x, Int p) {
  Int r = x % p;
  return r < 0 ? r + p : r;
}

// small fixed table of monic irreducible moduli (Conway polynomials)
const std::map<std::pair<Int, int>, std::vector<Int>>& modulus_table() {
  static const std::map<std::pair<Int, int>, std::vector<Int>> t = {
      {{3, 2}, {2, 2, 1}},    // x^2+2x+2, g^2 = g+1
      {{3, 3}, {1, 2, 0, 1}}, // x^3+2x+1
      {{5, 2}, {2, 4, 1}},    // x^2+4x+2
      {{5, 3}, {3, 3, 0, 1}}, // x^3+3x+3
      {{7, 2}, {3, 6, 1}},    // x^2+6x+3
      {{7, 3}, {4, 0, 6, 1}}, // x^3+6x^2+4
  };
  return t;
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

const GF* GF::get(Int p, int n0) {
  if (n0 == 1) return get(p, 1, {0, 1}); // modulus x; unused for arithmetic
  auto it = modulus_table().find({p, n0});
  if (it == modulus_table().end())
    throw std::invalid_argument("no built-in modulus for F_{" + std::to_string(p) + "^" + std::to_string(n0) +
                                "}; pass one explicitly");
  return get(p, n0, it->second);
}

const GF* GF::get(Int p, int n0, const std::vector<Int>& modulus) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n0 < 1 || n0 > kMaxDeg) throw std::invalid_argument("extension degree out of range");
  if (static_cast<int>(modulus.size()) != n0 + 1 || modulus[n0] != 1)
    throw std::invalid_argument("modulus must be monic of degree N0");

  static std::mutex mu;
  static std::map<std::tuple<Int, int, std::vector<Int>>, std::unique_ptr<GF>> registry;
  std::vector<Int> m(modulus);
  for (Int& c : m) c = mod_p(c, p);

  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, n0, m);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, std::unique_ptr<GF>(new GF(p, n0, m))).first;
  return it->second.get();
}

GF::GF(Int p, int n0, std::vector<Int> modulus) : p_(p), n0_(n0), mod_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < n0_; ++i) q_ *= p_;

  for (auto& row : red_) row.fill(0);
  // x^{n0} = -(c0 + c1 x + ... + c_{n0-1} x^{n0-1}); iterate for higher powers
  std::array<Int, kMaxDeg> cur{};
  for (int j = 0; j < n0_; ++j) cur[j] = mod_p(-mod_[j], p_);
  red_[0] = cur;
  for (int i = 1; i < n0_ - 1 + 1 && i < kMaxDeg; ++i) {
    // multiply cur by x and reduce
    std::array<Int, kMaxDeg> nxt{};
    Int top = cur[n0_ - 1];
    for (int j = n0_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
    nxt[0] = 0;
    for (int j = 0; j < n0_; ++j) nxt[j] = mod_p(nxt[j] + top * red_[0][j], p_);
    red_[i] = nxt;
    cur = nxt;
  }

  // frobenius matrix: column i = coords of (g^i)^p = (g^p)^i
  for (auto& row : frob_) row.fill(0);
  if (n0_ == 1) {
    frob_[0][0] = 1;
  } else {
    GfElem gp = gen().pow(p_);
    GfElem acc = one();
    for (int i = 0; i < n0_; ++i) {
      for (int j = 0; j < n0_; ++j) frob_[j][i] = acc.c_[j];
      acc = acc * gp;
    }
  }
  // inverse = frobenius^(n0-1)
  for (auto& row : frob_inv_) row.fill(0);
  for (int i = 0; i < n0_; ++i) frob_inv_[i][i] = 1;
  for (int k = 0; k < n0_ - 1; ++k) {
    std::array<std::array<Int, kMaxDeg>, kMaxDeg> r{};
    for (auto& row : r) row.fill(0);
    for (int i = 0; i < n0_; ++i)
      for (int j = 0; j < n0_; ++j)
        for (int l = 0; l < n0_; ++l) r[i][j] = mod_p(r[i][j] + frob_[i][l] * frob_inv_[l][j], p_);
    frob_inv_ = r;
  }

  // alpha0: basis monomials first, then coordinate order
  GfElem found;
  bool ok = false;
  for (int i = 0; i < n0_ && !ok; ++i) {
    std::vector<Int> c(n0_, 0);
    c[i] = 1;
    GfElem x = from_coords(c);
    if (x.trace() == 1) {
      found = x;
      ok = true;
    }
  }
  for (Int code = 0; code < q_ && !ok; ++code) {
    GfElem x = element(code);
    if (x.trace() == 1) {
      found = x;
      ok = true;
    }
  }
  if (!ok) throw std::logic_error("no trace-1 element found"); // impossible
  alpha0_ = std::make_unique<GfElem>(found);
}

GfElem GF::zero() const {
  GfElem e;
  e.f_ = this;
  return e;
}

GfElem GF::one() const { return from_int(1); }

GfElem GF::from_int(Int v) const {
  GfElem e = zero();
  e.c_[0] = mod_p(v, p_);
  return e;
}

GfElem GF::from_coords(const std::vector<Int>& c) const {
  if (static_cast<int>(c.size()) > n0_) throw std::invalid_argument("too many coordinates");
  GfElem e = zero();
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = mod_p(c[i], p_);
  return e;
}

GfElem GF::gen() const {
  if (n0_ == 1) throw std::domain_error("prime field has no extension generator");
  GfElem e = zero();
  e.c_[1] = 1;
  return e;
}

GfElem GF::element(Int code) const {
  GfElem e = zero();
  for (int i = 0; i < n0_; ++i) {
    e.c_[i] = code % p_;
    code /= p_;
  }
  return e;
}

const GfElem& GF::alpha0() const { return *alpha0_; }

std::string GF::name() const { return "F_" + std::to_string(q_); }

void GfElem::check_same(const GfElem& a, const GfElem& b) {
  if (a.f_ && b.f_ && a.f_ != b.f_) throw std::invalid_argument("mismatched field parameters");
}

bool GfElem::is_zero() const {
  for (Int x : c_)
    if (x != 0) return false;
  return true;
}

GfElem GfElem::operator+(const GfElem& o) const {
  check_same(*this, o);
  const GF* f = f_ ? f_ : o.f_;
  if (!f) return GfElem();
  GfElem r = f->zero();
  for (int i = 0; i < f->n0(); ++i) r.c_[i] = mod_p(c_[i] + o.c_[i], f->p());
  return r;
}

GfElem GfElem::operator-(const GfElem& o) const { return *this + (-o); }

GfElem GfElem::operator-() const {
  if (!f_) return GfElem();
  GfElem r = f_->zero();
  for (int i = 0; i < f_->n0(); ++i) r.c_[i] = mod_p(-c_[i], f_->p());
  return r;
}

GfElem GfElem::operator*(const GfElem& o) const {
  check_same(*this, o);
  const GF* f = f_ ? f_ : o.f_;
  if (!f || is_zero() || o.is_zero()) return f ? f->zero() : GfElem();
  const int n = f->n0();
  const Int p = f->p();
  std::array<Int, 2 * GF::kMaxDeg> prod{};
  prod.fill(0);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = mod_p(prod[i + j] + c_[i] * o.c_[j], p);
  }
  GfElem r = f->zero();
  for (int i = 0; i < n; ++i) r.c_[i] = prod[i];
  for (int d = 0; d <= n - 2; ++d) {
    Int hi = prod[n + d];
    if (hi == 0) continue;
    for (int j = 0; j < n; ++j) r.c_[j] = mod_p(r.c_[j] + hi * f->red_[d][j], p);
  }
  return r;
}

GfElem GfElem::pow(Int e) const {
  if (!f_) throw std::domain_error("pow on unbound zero");
  if (e < 0) return inv().pow(-e);
  GfElem r = f_->one();
  GfElem b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

GfElem GfElem::inv() const {
  if (!f_ || is_zero()) throw std::domain_error("inverse of zero");
  return pow(f_->q() - 2);
}

GfElem GfElem::frobenius(int n) const {
  if (!f_) return GfElem();
  const int n0 = f_->n0();
  int k = ((n % n0) + n0) % n0;
  if (k == 0 || n0 == 1) return *this;
  GfElem r = *this;
  for (int step = 0; step < k; ++step) {
    GfElem t = f_->zero();
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < n0; ++j) t.c_[i] = mod_p(t.c_[i] + f_->frob_[i][j] * r.c_[j], f_->p());
    r = t;
  }
  return r;
}

Int GfElem::trace() const {
  if (!f_) return 0;
  GfElem s = f_->zero();
  GfElem x = *this;
  for (int i = 0; i < f_->n0(); ++i) {
    s = s + x;
    x = x.frobenius(1);
  }
  for (int i = 1; i < f_->n0(); ++i)
    if (s.c_[i] != 0) throw std::logic_error("trace not in prime field");
  return s.c_[0];
}

GfElem GfElem::scaled(Int k) const {
  if (!f_) return GfElem();
  GfElem r = f_->zero();
  for (int i = 0; i < f_->n0(); ++i) r.c_[i] = mod_p(c_[i] * mod_p(k, f_->p()), f_->p());
  return r;
}

bool GfElem::operator==(const GfElem& o) const {
  if (f_ == o.f_) return c_ == o.c_;
  if (!f_) return o.is_zero();
  if (!o.f_) return is_zero();
  return false;
}

bool GfElem::operator<(const GfElem& o) const { return code() < o.code(); }

Int GfElem::code() const {
  if (!f_) return 0;
  Int v = 0;
  for (int i = f_->n0() - 1; i >= 0; --i) v = v * f_->p() + c_[i];
  return v;
}

std::string GfElem::str() const {
  if (!f_ || is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f_->n0() - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i == 1) os << "g";
    if (i > 1) os << "g^" << i;
  }
  return os.str();
}

} // namespace nas
