#pragma once

#include "nas/lie.hpp"
#include "nas/series.hpp"

namespace nas {

// Closed forms of the adjoint images V modulo third commutators, as sums
// over the generator window (a term is kept iff every generator index it
// references lies in the universe).
struct ClosedFormParams {
  const GF* f = nullptr;
  std::map<MultiIndex, GfElem> A; // A_iota, iota componentwise >= 0
  MultiIndex cbar0;
  int class_bound = 2;
};

// V_0 = ad l^{(m)}(D_0) mod C3:
//   -1/2 sum_{iota, 0<=n<N0} sigma^n(A_iota sum_{a1+a2=cbar0+p iota} a1^{(m)} [D_{a1,0}, D_{a2,0}])
LieElt closed_form_V0(int m, const ClosedFormParams& q, const GenTable* tab);

// V_a mod C3: the sigma^n bracket sum (n >= 1), the linear elimination term
// -sum_iota A_iota a^{(m)} D_{cbar0+p iota+a,0}, and the sigma^{-n} sum (n >= 0).
LieElt closed_form_Va(int m, const MultiIndex& a, const ClosedFormParams& q, const GenTable* tab);

// Quotient by C3 of the extended algebra: drops depth >= 3, depth-2 words
// containing an index >=lex cbar0, and linear D_b with b >=lex 2*cbar0.
// Used to compare the recurrence output against the closed forms.
LieElt reduce_mod_C3_extended(const LieElt& x, const MultiIndex& cbar0);

} // namespace nas
