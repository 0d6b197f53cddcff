#include "nas/solver.hpp"

#include <stdexcept>

namespace nas {

void SolverContext::preflight() const {
  if (!f) throw std::invalid_argument("solver: no field");
  omega.validate(f);
  if (omega.p != p()) throw std::invalid_argument("solver: p mismatch");
  for (int j = 0; j < win.dim(); ++j)
    if (!win.has_box(j))
      throw std::domain_error("solver: window must have finite componentwise bounds");
  if (!win.has_lex_cut() || !(win.lex_cut() <= cbar0() * p()))
    throw std::domain_error("solver: window lex cutoff must be at most p*cbar0");
  if (class_bound < 1 || class_bound > static_cast<int>(p()) - 1)
    throw std::invalid_argument("solver: class bound out of range");
}

LieSeries build_e(const SolverContext& ctx) {
  LieSeries e(ctx.tab.get(), ctx.class_bound);
  for (const auto& a : ctx.tab->d_indices()) {
    int id = ctx.tab->id_of(Gen::d(a, 0));
    e.add_term(Word::letter(id), Series::monomial(ctx.f, ctx.win, -a, ctx.f->one()));
  }
  e.add_term(Word::letter(ctx.tab->id_d0()),
             Series::monomial(ctx.f, ctx.win, MultiIndex::zero(ctx.N()), ctx.alpha0()));
  return e;
}

LieElt trace_lie(const LieElt& x) {
  LieElt r = x;
  const int n0 = x.tab()->n0();
  for (int i = 1; i < n0; ++i) r += x.sigma_act(i);
  return r;
}

std::map<MultiIndex, LieElt> by_exponent(const LieSeries& x) {
  std::map<MultiIndex, LieElt> r;
  for (const auto& [w, ser] : x.terms())
    for (const auto& [e, c] : ser.terms()) {
      auto it = r.find(e);
      if (it == r.end()) it = r.emplace(e, LieElt(x.tab(), x.class_bound())).first;
      it->second.add_term(w, c);
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

LieElt constant_part(const LieSeries& x) {
  LieElt r(x.tab(), x.class_bound());
  MultiIndex z = MultiIndex::zero(x.tab()->N());
  for (const auto& [w, ser] : x.terms()) {
    GfElem c = ser.coeff(z);
    if (!c.is_zero()) r.add_term(w, c);
  }
  return r;
}

namespace {

// generator image A(g) = g + increment, as a Lie element over k
LieElt pair_image(const SolverContext& ctx, const LiftPair& P, int id) {
  const GenTable* tab = ctx.tab.get();
  const Gen& g = tab->gen(id);
  LieElt img = LieElt::generator(tab, ctx.class_bound, id, ctx.f->one());
  switch (g.kind) {
  case Gen::Kind::D0:
    img += P.incr_d0;
    break;
  case Gen::Kind::D: {
    auto it = P.incr.find(g.a);
    if (it != P.incr.end()) img += it->second.sigma_act(g.n);
    break;
  }
  case Gen::Kind::L:
    break;
  }
  return img;
}

struct ImageCache {
  const SolverContext& ctx;
  const LiftPair& P;
  std::map<int, AssocMap<GfElem>> cache;
  const AssocMap<GfElem>& get(int id) {
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, pair_image(ctx, P, id).to_assoc()).first;
    return it->second;
  }
};

AssocMap<Series> promote_assoc(const AssocMap<GfElem>& m, const GF* f, const Window& w) {
  AssocMap<Series> r;
  for (const auto& [word, c] : m)
    r.emplace(word, Series::monomial(f, w, MultiIndex::zero(w.dim()), c));
  return r;
}

} // namespace

LieElt apply_pair_A(const SolverContext& ctx, const LiftPair& P, const LieElt& x) {
  ImageCache ic{ctx, P, {}};
  return apply_hom<GfElem>(x, [&](int id) { return ic.get(id); });
}

LieSeries apply_pair_A(const SolverContext& ctx, const LiftPair& P, const LieSeries& x) {
  ImageCache ic{ctx, P, {}};
  std::map<int, AssocMap<Series>> promoted;
  return apply_hom<Series>(x, [&](int id) {
    auto it = promoted.find(id);
    if (it == promoted.end()) it = promoted.emplace(id, promote_assoc(ic.get(id), ctx.f, ctx.win)).first;
    return it->second;
  });
}

namespace {

LieElt pair_image_inverse(const SolverContext& ctx, const LiftPair& P, int id) {
  const GenTable* tab = ctx.tab.get();
  LieElt g = LieElt::generator(tab, ctx.class_bound, id, ctx.f->one());
  LieElt x = g;
  for (int it = 0; it < 24; ++it) {
    LieElt ax = apply_pair_A(ctx, P, x);
    LieElt nxt = x - (ax - g);
    if (nxt == x) break;
    x = nxt;
  }
  if (apply_pair_A(ctx, P, x) != g) throw std::logic_error("automorphism inverse did not converge");
  return x;
}

} // namespace

LieElt apply_pair_A_inverse(const SolverContext& ctx, const LiftPair& P, const LieElt& x) {
  std::map<int, AssocMap<GfElem>> cache;
  return apply_hom<GfElem>(x, [&](int id) {
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, pair_image_inverse(ctx, P, id).to_assoc()).first;
    return it->second;
  });
}

LieSeries apply_pair_A_inverse(const SolverContext& ctx, const LiftPair& P, const LieSeries& x) {
  std::map<int, AssocMap<Series>> cache;
  return apply_hom<Series>(x, [&](int id) {
    auto it = cache.find(id);
    if (it == cache.end())
      it = cache.emplace(id, promote_assoc(pair_image_inverse(ctx, P, id).to_assoc(), ctx.f, ctx.win)).first;
    return it->second;
  });
}

Series apply_h_multi(const std::vector<Int>& exps, const Omega& omega, const Series& x) {
  const GF* f = x.field();
  if (!f || x.is_zero()) return x;
  bool trivial = true;
  for (Int n : exps) trivial = trivial && n == 0;
  if (trivial) return x;
  const Window& w = x.window();
  Series E = artin_hasse(omega.series_p(f, w));
  std::map<Int, Series> powers;
  powers[0] = Series::one(f, w);
  Series r(f, w);
  for (const auto& [e, c] : x.terms()) {
    Int n = 0;
    for (int j = 0; j < e.dim(); ++j) n += exps[j] * e[j];
    auto it = powers.find(n);
    if (it == powers.end()) it = powers.emplace(n, E.pow(n)).first;
    r += it->second.scaled(c).shifted(e);
  }
  return r;
}

LieSeries apply_h_coeffs(const std::vector<Int>& exps, const Omega& omega, const LieSeries& x) {
  LieSeries r(x.tab(), x.class_bound());
  for (const auto& [w, ser] : x.terms()) r.add_term(w, apply_h_multi(exps, omega, ser));
  return r;
}

LieSeries conjugated_e(const SolverContext& ctx, const LiftPair& P) {
  const GenTable* tab = ctx.tab.get();
  LieSeries Ae(tab, ctx.class_bound);
  for (const auto& a : tab->d_indices()) {
    LieElt img = pair_image(ctx, P, tab->id_of(Gen::d(a, 0)));
    LieSeries t = promote(img, ctx.f, ctx.win);
    for (const auto& [w, ser] : t.terms()) Ae.add_term(w, ser.shifted(-a));
  }
  // increment-only slots for indices outside the universe
  for (const auto& [b, inc] : P.incr) {
    if (tab->has_index(b)) continue;
    LieSeries t = promote(inc, ctx.f, ctx.win);
    for (const auto& [w, ser] : t.terms()) Ae.add_term(w, ser.shifted(-b));
  }
  LieElt img0 = pair_image(ctx, P, tab->id_d0());
  LieSeries t0 = promote(img0, ctx.f, ctx.win);
  for (const auto& [w, ser] : t0.terms()) Ae.add_term(w, ser.scaled(ctx.alpha0()));
  LieSeries sC = P.C.sigma_act(1);
  return ch_compose(ch_compose(sC, Ae), ch_inverse(P.C));
}

LieSeries lift_residual(const SolverContext& ctx, const LiftPair& P) {
  LieSeries he = apply_h_coeffs(P.h_exp, ctx.omega, build_e(ctx));
  return ch_compose(ch_inverse(conjugated_e(ctx, P)), he);
}

LiftPair solve_lift_pair(const SolverContext& ctx, int m) {
  ctx.preflight();
  if (m < 1 || m > ctx.N()) throw std::invalid_argument("m out of range");
  LiftPair P;
  P.C = LieSeries(ctx.tab.get(), ctx.class_bound);
  P.incr_d0 = LieElt(ctx.tab.get(), ctx.class_bound);
  P.h_exp.assign(ctx.N(), 0);
  P.h_exp[m - 1] = 1;

  LieSeries he = apply_h_coeffs(P.h_exp, ctx.omega, build_e(ctx));
  for (int s = 1; s <= ctx.class_bound; ++s) {
    LieSeries rho = ch_compose(ch_inverse(conjugated_e(ctx, P)), he);
    if (!rho.reduce_mod_depth(s).is_zero())
      throw std::logic_error("lift solve: residual below current depth");
    LieSeries rho_s = rho.depth_part(s);
    if (rho_s.is_zero()) continue;
    P.C += op_R_lie(rho_s, ctx.alpha0());
    LieElt rho0 = constant_part(rho_s);
    if (!rho0.is_zero()) P.incr_d0 += trace_lie(rho0);
    LieSeries S = op_S_lie(rho_s, ctx.alpha0());
    for (auto& [e, elt] : by_exponent(S)) {
      if (e.is_zero()) continue; // handled through the trace above
      MultiIndex a = -e;
      if (!a.in_Zplus(ctx.p()))
        throw std::logic_error("lift solve: S-part at unexpected exponent " + e.str());
      auto it = P.incr.find(a);
      if (it == P.incr.end())
        P.incr.emplace(a, elt);
      else {
        it->second += elt;
        if (it->second.is_zero()) P.incr.erase(it);
      }
    }
  }
  if (!lift_residual(ctx, P).is_zero())
    throw std::domain_error("lift solve: window too narrow, residual does not vanish");
  return P;
}

bool LiftCongruenceReport::all() const {
  if (!d0_ok || !commutator_ok) return false;
  for (const auto& [a, ok] : d_ok)
    if (!ok) return false;
  return true;
}

LiftCongruenceReport check_lift_congruences(const SolverContext& ctx, int m, int m1,
                                            const LiftPair& lift_m, const LiftPair& lift_m1) {
  (void)m;
  (void)m1;
  LiftCongruenceReport rep;
  const GenTable* tab = ctx.tab.get();

  // A(D0) = D0 modulo weight >= 3 plus (weight >= 2) * C2
  rep.d0_ok = true;
  for (const auto& [w, c] : lift_m.incr_d0.terms()) {
    (void)c;
    int wt = lift_m.incr_d0.word_weight(w);
    if (w.len == 1 && wt < 3) rep.d0_ok = false;
    if (w.len >= 2 && wt < 2) rep.d0_ok = false;
  }

  auto A = omega_A_coeffs(ctx.omega, ctx.f, ctx.win);
  int m_idx = 0;
  for (int j = 0; j < static_cast<int>(lift_m.h_exp.size()); ++j)
    if (lift_m.h_exp[j] != 0) m_idx = j;
  for (const auto& a : tab->d_indices()) {
    int s = tab->weight(tab->id_of(Gen::d(a, 0)));
    LieElt expected(tab, ctx.class_bound);
    for (const auto& [iota, A_i] : A) {
      MultiIndex b = a + ctx.cbar0() + iota * ctx.p();
      int id = tab->find(Gen::d(b, 0));
      if (id < 0) continue;
      expected.add_term(Word::letter(id), A_i.scaled(-(a[m_idx] % ctx.p())));
    }
    auto it = lift_m.incr.find(a);
    LieElt diff = it == lift_m.incr.end() ? -expected : it->second - expected;
    bool ok = true;
    for (const auto& [w, c] : diff.terms()) {
      (void)c;
      int wt = diff.word_weight(w);
      if (w.len == 1 && wt < s + 2) ok = false;
      if (w.len >= 2 && wt < s + 1) ok = false;
    }
    rep.d_ok[a] = ok;
  }

  LiftPair comm = commutator_pair(ctx, lift_m, lift_m1);
  rep.commutator_ok = true;
  for (Int n : comm.h_exp)
    if (n != 0) rep.commutator_ok = false;
  LieElt l0 = constant_part(comm.C);
  for (const auto& [w, c] : l0.terms()) {
    (void)c;
    if (l0.word_weight(w) < 2) rep.commutator_ok = false;
  }
  return rep;
}

LiftPair compose_pairs(const SolverContext& ctx, const LiftPair& P, const LiftPair& Q) {
  LiftPair R;
  R.C = ch_compose(apply_h_coeffs(P.h_exp, ctx.omega, Q.C), apply_pair_A(ctx, Q, P.C));
  R.incr_d0 = Q.incr_d0 + apply_pair_A(ctx, Q, P.incr_d0);
  std::map<MultiIndex, LieElt> keys = Q.incr;
  for (const auto& [a, inc] : P.incr) {
    LieElt add = apply_pair_A(ctx, Q, inc);
    auto it = keys.find(a);
    if (it == keys.end())
      keys.emplace(a, add);
    else {
      it->second += add;
      if (it->second.is_zero()) keys.erase(it);
    }
  }
  R.incr = std::move(keys);
  R.h_exp.resize(P.h_exp.size());
  for (std::size_t j = 0; j < P.h_exp.size(); ++j) R.h_exp[j] = P.h_exp[j] + Q.h_exp[j];
  return R;
}

LiftPair inverse_pair(const SolverContext& ctx, const LiftPair& P) {
  LiftPair R;
  R.h_exp.resize(P.h_exp.size());
  for (std::size_t j = 0; j < P.h_exp.size(); ++j) R.h_exp[j] = -P.h_exp[j];
  R.C = apply_pair_A_inverse(ctx, P, ch_inverse(apply_h_coeffs(R.h_exp, ctx.omega, P.C)));
  R.incr_d0 = -apply_pair_A_inverse(ctx, P, P.incr_d0);
  for (const auto& [a, inc] : P.incr) {
    LieElt v = -apply_pair_A_inverse(ctx, P, inc);
    if (!v.is_zero()) R.incr.emplace(a, v);
  }
  return R;
}

LiftPair commutator_pair(const SolverContext& ctx, const LiftPair& P, const LiftPair& Q) {
  // (P,Q) = P^{-1} Q^{-1} P Q
  return compose_pairs(ctx, inverse_pair(ctx, P),
                       compose_pairs(ctx, inverse_pair(ctx, Q), compose_pairs(ctx, P, Q)));
}

LieElt C1Solution::v_at(const MultiIndex& a) const {
  auto it = v.find(a);
  if (it != v.end()) return it->second;
  return LieElt(c1.tab(), c1.class_bound());
}

namespace {

LieSeries v_series(const SolverContext& ctx, const C1Solution& s) {
  LieSeries r(ctx.tab.get(), ctx.class_bound);
  for (const auto& [a, elt] : s.v) {
    LieSeries t = promote(elt, ctx.f, ctx.win);
    for (const auto& [w, ser] : t.terms()) r.add_term(w, ser.shifted(-a));
  }
  LieSeries t0 = promote(s.v_d0, ctx.f, ctx.win);
  for (const auto& [w, ser] : t0.terms()) r.add_term(w, ser.scaled(ctx.alpha0()));
  return r;
}

LieSeries c1_rhs(const SolverContext& ctx, int m, const C1Solution& s, const LieSeries& e) {
  const Int p = ctx.p();
  Series omega_p = ctx.omega.series_p(ctx.f, ctx.win);
  LieSeries seed1(ctx.tab.get(), ctx.class_bound);
  for (const auto& a : ctx.tab->d_indices()) {
    Int am = a[m - 1] % p;
    if (am == 0) continue;
    int id = ctx.tab->id_of(Gen::d(a, 0));
    seed1.add_term(Word::letter(id), omega_p.shifted(-a).scaled(am));
  }
  LieSeries acc1 = seed1;
  LieSeries acc2 = v_series(ctx, s);
  LieSeries acc3 = s.c1.sigma_act(1).bracket(e);
  LieSeries total(ctx.tab.get(), ctx.class_bound);
  Int kfact_inv = 1;
  for (int k = 1; k <= ctx.class_bound; ++k) {
    kfact_inv = (kfact_inv * inv_mod(k, p)) % p;
    total += acc1.scaled(-kfact_inv);
    if (k >= 2) total += acc2.scaled(-kfact_inv);
    total += acc3.scaled(-kfact_inv);
    if (k < ctx.class_bound) {
      acc1 = acc1.bracket(e);
      acc2 = acc2.bracket(e);
      acc3 = acc3.bracket(e);
    }
  }
  return total;
}

} // namespace

LieSeries c1_residual(const SolverContext& ctx, int m, const C1Solution& s) {
  LieSeries e = build_e(ctx);
  LieSeries lhs = s.c1.sigma_act(1) - s.c1 + v_series(ctx, s);
  return c1_rhs(ctx, m, s, e) - lhs;
}

C1Solution solve_c1(const SolverContext& ctx, int m) {
  ctx.preflight();
  if (m < 1 || m > ctx.N()) throw std::invalid_argument("m out of range");
  C1Solution s;
  s.m = m;
  s.c1 = LieSeries(ctx.tab.get(), ctx.class_bound);
  s.v_d0 = LieElt(ctx.tab.get(), ctx.class_bound);
  for (int d = 1; d <= ctx.class_bound; ++d) {
    LieSeries rho = c1_residual(ctx, m, s);
    if (!rho.reduce_mod_depth(d).is_zero())
      throw std::logic_error("c1 solve: residual below current depth");
    LieSeries rho_d = rho.depth_part(d);
    if (rho_d.is_zero()) continue;
    s.c1 += op_R_lie(rho_d, ctx.alpha0());
    LieElt rho0 = constant_part(rho_d);
    if (!rho0.is_zero()) s.v_d0 += trace_lie(rho0);
    LieSeries S = op_S_lie(rho_d, ctx.alpha0());
    for (auto& [e2, elt] : by_exponent(S)) {
      if (e2.is_zero()) continue;
      MultiIndex a = -e2;
      if (!a.in_Zplus(ctx.p()))
        throw std::logic_error("c1 solve: S-part at unexpected exponent " + e2.str());
      auto it = s.v.find(a);
      if (it == s.v.end())
        s.v.emplace(a, elt);
      else {
        it->second += elt;
        if (it->second.is_zero()) s.v.erase(it);
      }
    }
  }
  if (!c1_residual(ctx, m, s).is_zero())
    throw std::domain_error("c1 solve: window too narrow, residual does not vanish");
  return s;
}

LieElt ad_lift(const SolverContext& ctx, const C1Solution& s, const LieElt& x) {
  const GenTable* tab = ctx.tab.get();
  return apply_derivation<GfElem>(x, [&](int id) -> LieElt {
    const Gen& g = tab->gen(id);
    switch (g.kind) {
    case Gen::Kind::D0: return s.v_d0;
    case Gen::Kind::D: return s.v_at(g.a).sigma_act(g.n);
    case Gen::Kind::L: return LieElt(tab, ctx.class_bound);
    }
    return LieElt(tab, ctx.class_bound);
  });
}

LieSeries ad_lift(const SolverContext& ctx, const C1Solution& s, const LieSeries& x) {
  const GenTable* tab = ctx.tab.get();
  return apply_derivation<Series>(x, [&](int id) -> LieSeries {
    const Gen& g = tab->gen(id);
    switch (g.kind) {
    case Gen::Kind::D0: return promote(s.v_d0, ctx.f, ctx.win);
    case Gen::Kind::D: return promote(s.v_at(g.a).sigma_act(g.n), ctx.f, ctx.win);
    case Gen::Kind::L: break;
    }
    return LieSeries(tab, ctx.class_bound);
  });
}

LieSeries d_derivation(const SolverContext& ctx, int m, const LieSeries& x) {
  Series omega_p = ctx.omega.series_p(ctx.f, ctx.win);
  LieSeries r(x.tab(), x.class_bound());
  for (const auto& [w, ser] : x.terms()) {
    Series t(ctx.f, ser.window());
    for (const auto& [e, c] : ser.terms()) t.add_term(e, c.scaled(e[m - 1] % ctx.p()));
    r.add_term(w, t * omega_p);
  }
  return r;
}

LieElt bracket_lij(const SolverContext& ctx, int i, int j, const C1Solution& si, const C1Solution& sj) {
  if (i == j) throw std::invalid_argument("bracket_lij needs i != j");
  // derivation route
  LieSeries X = d_derivation(ctx, j, si.c1) - ad_lift(ctx, sj, si.c1) - d_derivation(ctx, i, sj.c1) +
                ad_lift(ctx, si, sj.c1) + si.c1.bracket(sj.c1);
  LieElt route_a = constant_part(X);
  // constant-term pairing route
  auto dec_i = by_exponent(si.c1);
  auto dec_j = by_exponent(sj.c1);
  MultiIndex z = MultiIndex::zero(ctx.N());
  LieElt route_b(ctx.tab.get(), ctx.class_bound);
  auto it0 = dec_j.find(z);
  if (it0 != dec_j.end()) route_b += ad_lift(ctx, si, it0->second);
  it0 = dec_i.find(z);
  if (it0 != dec_i.end()) route_b = route_b - ad_lift(ctx, sj, it0->second);
  for (const auto& [iota, ci] : dec_i) {
    auto it = dec_j.find(-iota);
    if (it != dec_j.end()) route_b += ci.bracket(it->second);
  }
  if (route_a != route_b)
    throw std::logic_error("bracket_lij: derivation and pairing evaluations disagree");
  return route_a;
}

} // namespace nas
