#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nas/multi_index.hpp"

namespace nas {

class GfElem;

// The last residue field k = F_{p^{N0}} as F_p[g]/(modulus), p an odd prime.
// Instances are interned: pointer equality == same field parameters.
class GF {
public:
  static constexpr int kMaxDeg = 4;

  // Fixed modulus table (Conway-style) for small (p, N0).
  static const GF* get(Int p, int n0);
  // Explicit monic modulus, coefficients c0..c_{n0} ascending, c_{n0} = 1.
  static const GF* get(Int p, int n0, const std::vector<Int>& modulus);

  Int p() const { return p_; }
  int n0() const { return n0_; }
  Int q() const { return q_; }
  const std::vector<Int>& modulus() const { return mod_; }

  GfElem zero() const;
  GfElem one() const;
  GfElem from_int(Int v) const;                     // image of v in F_p subfield
  GfElem from_coords(const std::vector<Int>& c) const;
  GfElem gen() const;                               // the class of g
  GfElem element(Int code) const;                   // code = sum c_i p^i, 0 <= code < q

  // Deterministic trace-1 element: basis monomials 1, g, g^2, ... first,
  // then all elements in coordinate order.
  const GfElem& alpha0() const;

  std::string name() const;

private:
  GF(Int p, int n0, std::vector<Int> modulus);
  friend class GfElem;

  Int p_;
  int n0_;
  Int q_;
  std::vector<Int> mod_;                            // length n0+1, monic
  std::array<std::array<Int, kMaxDeg>, kMaxDeg> red_; // x^{n0+i} reduced, rows i=0..n0-2
  std::array<std::array<Int, kMaxDeg>, kMaxDeg> frob_;     // frobenius matrix, columns = images of g^i
  std::array<std::array<Int, kMaxDeg>, kMaxDeg> frob_inv_;
  std::unique_ptr<GfElem> alpha0_;
};

// Element of F_{p^{N0}}; value semantics, inline coordinates.
class GfElem {
public:
  GfElem() : f_(nullptr) { c_.fill(0); }            // unbound zero

  const GF* field() const { return f_; }
  bool is_zero() const;
  bool is_unbound() const { return f_ == nullptr; }

  GfElem operator+(const GfElem& o) const;
  GfElem operator-(const GfElem& o) const;
  GfElem operator-() const;
  GfElem operator*(const GfElem& o) const;
  GfElem& operator+=(const GfElem& o) { return *this = *this + o; }
  GfElem inv() const;
  GfElem pow(Int e) const;

  // x -> x^{p^n}; n may be negative (reduced mod N0)
  GfElem frobenius(int n) const;
  // absolute trace as an integer in [0, p)
  Int trace() const;

  GfElem scaled(Int k) const;                       // multiply by k mod p

  bool operator==(const GfElem& o) const;
  bool operator!=(const GfElem& o) const { return !(*this == o); }
  bool operator<(const GfElem& o) const;            // coordinate order, for canonical maps

  Int coord(int i) const { return c_[i]; }
  Int code() const;                                 // sum c_i p^i
  std::string str() const;                          // e.g. "0", "1", "g", "2g+1"

private:
  friend class GF;
  const GF* f_;
  std::array<Int, GF::kMaxDeg> c_;

  static void check_same(const GfElem& a, const GfElem& b);
};

} // namespace nas
