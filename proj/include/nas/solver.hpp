#pragma once

#include <map>
#include <optional>

#include "nas/ch.hpp"
#include "nas/sr_ops.hpp"

namespace nas {

// Shared context for the conjugation-equation solvers.
struct SolverContext {
  const GF* f = nullptr;
  Omega omega;
  std::shared_ptr<const GenTable> tab; // generator universe
  Window win;                          // series window
  int class_bound = 2;

  Int p() const { return tab->p(); }
  int N() const { return tab->N(); }
  int n0() const { return tab->n0(); }
  const MultiIndex& cbar0() const { return omega.cbar0; }
  GfElem alpha0() const { return f->alpha0(); }

  void preflight() const; // window sanity: finite boxes, lex cut <= p*cbar0
};

// e = sum_{a in window} t^{-a} D_{a,0} + alpha0 D_0
LieSeries build_e(const SolverContext& ctx);

// trace over the sigma-orbit: sum_{0<=i<N0} sigma^i(x)
LieElt trace_lie(const LieElt& x);

// LieSeries terms regrouped by exponent
std::map<MultiIndex, LieElt> by_exponent(const LieSeries& x);
LieElt constant_part(const LieSeries& x);

// Automorphism lift pair (C, A): A is unipotent, given by generator
// increments A(D) = D + incr[D]; slots may exist for indices outside the
// universe (increment-only, the generator itself is cut by the window).
// h_exp records the substitution part: t_j -> t_j E(omega^p)^{h_exp[j]}.
struct LiftPair {
  LieSeries C;
  LieElt incr_d0;
  std::map<MultiIndex, LieElt> incr;
  std::vector<Int> h_exp;
};

LieElt apply_pair_A(const SolverContext& ctx, const LiftPair& P, const LieElt& x);
LieSeries apply_pair_A(const SolverContext& ctx, const LiftPair& P, const LieSeries& x);
LieElt apply_pair_A_inverse(const SolverContext& ctx, const LiftPair& P, const LieElt& x);
LieSeries apply_pair_A_inverse(const SolverContext& ctx, const LiftPair& P, const LieSeries& x);

// substitution with exponent vector: t_j -> t_j E(omega^p)^{n_j}
Series apply_h_multi(const std::vector<Int>& exps, const Omega& omega, const Series& x);
LieSeries apply_h_coeffs(const std::vector<Int>& exps, const Omega& omega, const LieSeries& x);

// sigma C o (A (x) id)e o (-C), with increment-only slots included
LieSeries conjugated_e(const SolverContext& ctx, const LiftPair& P);

// solve the conjugation equation (id (x) h^{(m)}) e = sigma C o (A e) o (-C)
// depth by depth; returns the canonical pair (C^{0(m)}, A^{0(m)})
LiftPair solve_lift_pair(const SolverContext& ctx, int m);

// residual of the conjugation equation for P against h given by P.h_exp
LieSeries lift_residual(const SolverContext& ctx, const LiftPair& P);

struct LiftCongruenceReport {
  bool d0_ok = false;                         // A(D0) = D0 mod wt-3 + wt-2*C2
  std::map<MultiIndex, bool> d_ok;            // linear increments match mod filtration
  bool commutator_ok = false;                 // commutator of two lifts sits in wt >= 2
  bool all() const;
};
LiftCongruenceReport check_lift_congruences(const SolverContext& ctx, int m, int m1,
                                            const LiftPair& lift_m, const LiftPair& lift_m1);

// group operations on pairs; compose(P,Q) = pair of (P-hat after Q-hat)
LiftPair compose_pairs(const SolverContext& ctx, const LiftPair& P, const LiftPair& Q);
LiftPair inverse_pair(const SolverContext& ctx, const LiftPair& P);
LiftPair commutator_pair(const SolverContext& ctx, const LiftPair& P, const LiftPair& Q);

// Solution of the main recurrence: the element c1^{(m)} together with the
// adjoint images V_a = ad l^{(m)}(D_{a,0}) and V_0 = ad l^{(m)}(D_0).
struct C1Solution {
  int m = 0;
  LieSeries c1;
  LieElt v_d0;
  std::map<MultiIndex, LieElt> v;

  LieElt v_at(const MultiIndex& a) const;
};

C1Solution solve_c1(const SolverContext& ctx, int m);

// residual of the main recurrence at the given partial solution
LieSeries c1_residual(const SolverContext& ctx, int m, const C1Solution& s);

// ad l^{(m)} as a derivation (D(a,n) -> sigma^n V_a, D0 -> V_0)
LieElt ad_lift(const SolverContext& ctx, const C1Solution& s, const LieElt& x);
LieSeries ad_lift(const SolverContext& ctx, const C1Solution& s, const LieSeries& x);

// derivation d^{(m)}: t^b -> b^{(m)} t^b omega^p on coefficients
LieSeries d_derivation(const SolverContext& ctx, int m, const LieSeries& x);

// [l^{(i)}, l^{(j)}] computed two ways (derivation route and the constant-
// term pairing route); the two must agree exactly
LieElt bracket_lij(const SolverContext& ctx, int i, int j, const C1Solution& si, const C1Solution& sj);

} // namespace nas
