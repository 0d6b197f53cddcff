#include "nas/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "nas/ch.hpp"
#include "nas/parallel.hpp"

namespace nas {

std::string Relation::label() const {
  switch (kind) {
  case Kind::LL: return "R(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
  case Kind::R0: return "R0(" + std::to_string(m1) + ")";
  case Kind::Ra: return "Ra(" + a.str() + "," + std::to_string(m1) + "," + std::to_string(m2) + ")";
  case Kind::V: return "V(" + a.str() + "," + std::to_string(m1) + ")";
  }
  return "?";
}

bool Presentation::operator==(const Presentation& o) const {
  if (form != o.form || class_bound != o.class_bound) return false;
  if (relations.size() != o.relations.size()) return false;
  if (tab->size() != o.tab->size()) return false;
  for (int i = 0; i < tab->size(); ++i)
    if (!(tab->gen(i) == o.tab->gen(i))) return false;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Relation& x = relations[i];
    const Relation& y = o.relations[i];
    if (x.kind != y.kind || x.m1 != y.m1 || x.m2 != y.m2) return false;
    if (x.kind == Relation::Kind::Ra && !(x.a == y.a)) return false;
    if (form == PresForm::LieOverK) {
      if (x.body.terms() != y.body.terms()) return false;
    } else {
      if (x.word != y.word) return false;
    }
  }
  return true;
}

namespace {

std::shared_ptr<const GenTable> minimal_table(const PresParams& q) {
  GenTable::Params tp;
  tp.p = q.p;
  tp.N = q.N;
  tp.n0 = q.n0;
  tp.cbar0 = q.cbar0;
  tp.wt_max = 1; // a < cbar0
  tp.box = q.gbox;
  tp.with_L = true;
  return GenTable::window(tp);
}

ClosedFormParams cf_params(const PresParams& q) {
  ClosedFormParams c;
  c.f = q.f;
  c.A = q.A;
  c.cbar0 = q.cbar0;
  c.class_bound = 2;
  return c;
}

LieElt bracket_gen(const GenTable* tab, int cls, int id1, int id2, const GF* f) {
  LieElt x = LieElt::generator(tab, cls, id1, f->one());
  LieElt y = LieElt::generator(tab, cls, id2, f->one());
  return x.bracket(y);
}

Relation make_R0(const PresParams& q, const GenTable* tab, int m, const ClosedFormParams& cf) {
  Relation r;
  r.kind = Relation::Kind::R0;
  r.m1 = m;
  r.body = bracket_gen(tab, 2, tab->id_d0(), tab->id_l(m), q.f) - closed_form_V0(m, cf, tab);
  return r;
}

Relation make_Ra(const PresParams& q, const GenTable* tab, const MultiIndex& a, int m1, int m2,
                 const ClosedFormParams& cf) {
  // a^{(m2)} ([D_a, l^{(m1)}] - V^{(m1)}_a) - a^{(m1)} ([D_a, l^{(m2)}] - V^{(m2)}_a)
  Relation r;
  r.kind = Relation::Kind::Ra;
  r.a = a;
  r.m1 = m1;
  r.m2 = m2;
  int id_a = tab->id_of(Gen::d(a, 0));
  LieElt b1 = bracket_gen(tab, 2, id_a, tab->id_l(m1), q.f) - closed_form_Va(m1, a, cf, tab);
  LieElt b2 = bracket_gen(tab, 2, id_a, tab->id_l(m2), q.f) - closed_form_Va(m2, a, cf, tab);
  r.body = b1.scaled(a[m2 - 1]) - b2.scaled(a[m1 - 1]);
  return r;
}

} // namespace

Presentation relations_mod_C3(const PresParams& q) {
  Presentation pres;
  pres.form = PresForm::LieOverK;
  pres.params = q;
  pres.class_bound = 2;
  pres.tab = minimal_table(q);
  const GenTable* tab = pres.tab.get();
  ClosedFormParams cf = cf_params(q);

  for (int m1 = 1; m1 <= q.N; ++m1)
    for (int m2 = m1 + 1; m2 <= q.N; ++m2) {
      Relation r;
      r.kind = Relation::Kind::LL;
      r.m1 = m1;
      r.m2 = m2;
      r.body = bracket_gen(tab, 2, tab->id_l(m1), tab->id_l(m2), q.f);
      pres.relations.push_back(std::move(r));
    }
  for (int m = 1; m <= q.N; ++m) pres.relations.push_back(make_R0(q, tab, m, cf));

  const auto& idx = tab->d_indices();
  std::vector<std::vector<Relation>> per_index(idx.size());
#pragma omp parallel for schedule(dynamic) if (parallel_enabled())
  for (long i = 0; i < static_cast<long>(idx.size()); ++i) {
    for (int m1 = 1; m1 <= q.N; ++m1)
      for (int m2 = m1 + 1; m2 <= q.N; ++m2)
        per_index[i].push_back(make_Ra(q, tab, idx[i], m1, m2, cf));
  }
  for (auto& v : per_index)
    for (auto& r : v) pres.relations.push_back(std::move(r));
  return pres;
}

Presentation full_presentation(const PresParams& q, int wt_max) {
  Presentation pres;
  pres.form = PresForm::LieOverK;
  pres.params = q;
  pres.class_bound = 2;
  GenTable::Params tp;
  tp.p = q.p;
  tp.N = q.N;
  tp.n0 = q.n0;
  tp.cbar0 = q.cbar0;
  tp.wt_max = wt_max;
  tp.box = q.gbox;
  tp.with_L = true;
  pres.tab = GenTable::window(tp);
  const GenTable* tab = pres.tab.get();
  ClosedFormParams cf = cf_params(q);

  for (int m1 = 1; m1 <= q.N; ++m1)
    for (int m2 = m1 + 1; m2 <= q.N; ++m2) {
      Relation r;
      r.kind = Relation::Kind::LL;
      r.m1 = m1;
      r.m2 = m2;
      r.body = bracket_gen(tab, 2, tab->id_l(m1), tab->id_l(m2), q.f);
      pres.relations.push_back(std::move(r));
    }
  for (int m = 1; m <= q.N; ++m) pres.relations.push_back(make_R0(q, tab, m, cf));
  for (const auto& a : tab->d_indices())
    for (int m = 1; m <= q.N; ++m) {
      Relation r;
      r.kind = Relation::Kind::V;
      r.a = a;
      r.m1 = m;
      r.body = bracket_gen(tab, 2, tab->id_of(Gen::d(a, 0)), tab->id_l(m), q.f) -
               closed_form_Va(m, a, cf, tab);
      pres.relations.push_back(std::move(r));
    }
  return pres;
}

namespace {

int smallest_valid_m(const MultiIndex& a, Int p) {
  for (int m = 1; m <= a.dim(); ++m)
    if (a[m - 1] % p != 0) return m;
  throw std::logic_error("index prime to p has some unit component"); // unreachable
}

// LieElt translation between universes (every generator must exist in `to`)
LieElt translate(const LieElt& x, const GenTable* to) {
  LieElt r(to, x.class_bound());
  AssocMap<GfElem> acc;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [word, k] : lyndon_expand(w)) {
      Word nw = word;
      for (int i = 0; i < nw.len; ++i) nw.g[i] = to->id_of(x.tab()->gen(word.g[i]));
      assoc_add_term(acc, nw, c.scaled(k));
    }
  }
  return LieElt::project(std::move(acc), to, x.class_bound());
}

} // namespace

Presentation eliminate_generators(const Presentation& pres) {
  const GenTable* tab = pres.tab.get();
  const PresParams& q = pres.params;
  const Int p = q.p;

  bool minimal = true;
  for (const auto& a : tab->d_indices())
    if (!(a < q.cbar0)) minimal = false;
  if (minimal) return pres;

  ClosedFormParams cf = cf_params(q);
  GfElem A0 = q.A.at(MultiIndex::zero(q.N));

  // expr(b) rewrites D_b, b > cbar0, into minimal generators mod C3
  std::map<MultiIndex, LieElt> expr_cache;
  std::function<LieElt(const MultiIndex&)> expr = [&](const MultiIndex& b) -> LieElt {
    auto hit = expr_cache.find(b);
    if (hit != expr_cache.end()) return hit->second;
    MultiIndex ap = b - q.cbar0;
    if (!ap.in_Zplus(p)) throw std::logic_error("eliminate: index " + b.str() + " not reachable");
    int ma = smallest_valid_m(ap, p);
    LieElt V = closed_form_Va(ma, ap, cf, tab);
    int id_b = tab->id_of(Gen::d(b, 0));
    GfElem lead = A0.scaled(-(ap[ma - 1] % p)); // coefficient of D_b in V
    LieElt Vrest = V - LieElt::generator(tab, 2, id_b, lead);
    LieElt raw = (Vrest - bracket_gen(tab, 2, tab->id_of(Gen::d(ap, 0)), tab->id_l(ma), q.f))
                     .scaled_by(lead.inv());
    // normalize: drop depth-2 words with an index >= cbar0 (they sit in C3
    // of the extended algebra), recurse on linear parts above cbar0
    LieElt out(tab, 2);
    for (const auto& [w, c] : raw.terms()) {
      if (w.len == 1) {
        const Gen& g = tab->gen(w.g[0]);
        if (g.kind == Gen::Kind::D && !(g.a < q.cbar0)) {
          if (g.n != 0) throw std::logic_error("eliminate: twisted linear remainder");
          out += expr(g.a).scaled_by(c);
          continue;
        }
        out.add_term(w, c);
      } else {
        bool keep = true;
        for (int i = 0; i < w.len; ++i) {
          const Gen& g = tab->gen(w.g[i]);
          if (g.kind == Gen::Kind::D && !(g.a < q.cbar0)) keep = false;
        }
        if (keep) out.add_term(w, c);
      }
    }
    expr_cache.emplace(b, out);
    return out;
  };

  auto reduce_body = [&](const LieElt& body) -> LieElt {
    LieElt out(tab, 2);
    for (const auto& [w, c] : body.terms()) {
      if (w.len == 1) {
        const Gen& g = tab->gen(w.g[0]);
        if (g.kind == Gen::Kind::D && !(g.a < q.cbar0)) {
          // c * D_{b,n} = c * sigma^n(D_{b,0})
          out += expr(g.a).sigma_act(g.n).scaled_by(c);
          continue;
        }
        out.add_term(w, c);
      } else {
        bool keep = true;
        for (int i = 0; i < w.len; ++i) {
          const Gen& g = tab->gen(w.g[i]);
          if (g.kind == Gen::Kind::D && !(g.a < q.cbar0)) keep = false;
        }
        if (keep) out.add_term(w, c);
      }
    }
    return out;
  };

  // rebuild on the minimal universe
  PresParams qmin = q;
  Presentation out;
  out.form = PresForm::LieOverK;
  out.params = qmin;
  out.class_bound = 2;
  out.tab = minimal_table(qmin);

  std::map<std::pair<std::vector<Int>, int>, LieElt> vrel; // (a, m) -> body, a < cbar0
  for (const auto& rel : pres.relations) {
    switch (rel.kind) {
    case Relation::Kind::LL: {
      Relation r = rel;
      r.body = translate(reduce_body(rel.body), out.tab.get());
      out.relations.push_back(std::move(r));
      break;
    }
    case Relation::Kind::R0: {
      Relation r = rel;
      r.body = translate(reduce_body(rel.body), out.tab.get());
      out.relations.push_back(std::move(r));
      break;
    }
    case Relation::Kind::V: {
      if (rel.a < q.cbar0) vrel.emplace(std::make_pair(rel.a.components(), rel.m1), reduce_body(rel.body));
      // relations at a >= cbar0 are consumed by the elimination itself
      break;
    }
    case Relation::Kind::Ra: {
      Relation r = rel;
      r.body = translate(reduce_body(rel.body), out.tab.get());
      out.relations.push_back(std::move(r));
      break;
    }
    }
  }
  // combine the surviving V relations into the canonical Ra(a, m1, m2)
  std::vector<MultiIndex> min_idx;
  for (const auto& a : tab->d_indices())
    if (a < q.cbar0) min_idx.push_back(a);
  for (const auto& a : min_idx) {
    for (int m1 = 1; m1 <= q.N; ++m1)
      for (int m2 = m1 + 1; m2 <= q.N; ++m2) {
        Relation r;
        r.kind = Relation::Kind::Ra;
        r.a = a;
        r.m1 = m1;
        r.m2 = m2;
        LieElt b1 = vrel.at({a.components(), m1});
        LieElt b2 = vrel.at({a.components(), m2});
        r.body = translate(b1.scaled(a[m2 - 1]) - b2.scaled(a[m1 - 1]), out.tab.get());
        out.relations.push_back(std::move(r));
      }
  }
  return out;
}

Presentation char0_presentation(Int p, int N, int n0, const MultiIndex& cbar2,
                                const std::map<MultiIndex, GfElem>& beta, PresForm form,
                                const std::vector<Int>& gbox, const Window& win, const GF* f) {
  if (!cbar2.lex_positive()) throw std::invalid_argument("cbar2 must be lex-positive");
  auto b0 = beta.find(MultiIndex::zero(N));
  if (b0 == beta.end() || b0->second.is_zero()) throw std::invalid_argument("beta_0 must be nonzero");
  PresParams q;
  q.p = p;
  q.N = N;
  q.n0 = n0;
  q.cbar0 = cbar2 * p;
  q.f = f;
  q.gbox = gbox;
  q.win = win;
  for (const auto& [iota, b] : beta) {
    GfElem a = b.frobenius(1); // beta^p
    if (!a.is_zero()) q.A.emplace(iota, a);
  }
  Presentation pres = relations_mod_C3(q);
  if (form == PresForm::GroupZp) return to_group_form(pres);
  return pres;
}

Presentation to_group_form(const Presentation& lie_pres) {
  if (lie_pres.params.n0 != 1)
    throw std::invalid_argument("group form requires last residue field F_p (N0 = 1)");
  if (lie_pres.class_bound != 2)
    throw std::invalid_argument("group form is only available mod C3 (class 2)");
  Presentation out = lie_pres;
  out.form = PresForm::GroupZp;
  for (auto& rel : out.relations) {
    rel.word.clear();
    for (const auto& [w, c] : rel.body.terms()) {
      if (w.len != 2)
        throw std::logic_error("group form: relation body has a non-commutator term");
      rel.word.push_back(GroupFactor{w.g[0], w.g[1], c.coord(0)});
    }
  }
  return out;
}

} // namespace nas
