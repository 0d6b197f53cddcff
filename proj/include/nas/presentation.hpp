#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nas/closed_forms.hpp"
#include "nas/gen.hpp"
#include "nas/lie.hpp"
#include "nas/series.hpp"

namespace nas {

enum class PresForm { LieOverK, GroupZp };

// one factor (g1, g2)^exp of a group-form relation word
struct GroupFactor {
  int g1 = 0, g2 = 0;
  Int exp = 0;
  bool operator==(const GroupFactor& o) const { return g1 == o.g1 && g2 == o.g2 && exp == o.exp; }
};

struct Relation {
  enum class Kind { LL, R0, Ra, V };
  Kind kind = Kind::R0;
  int m1 = 0, m2 = 0;
  MultiIndex a;
  LieElt body;                    // Lie form (moved to one side, body = 0)
  std::vector<GroupFactor> word;  // group form

  std::string label() const;
};

struct PresParams {
  Int p = 0;
  int N = 0;
  int n0 = 1;
  MultiIndex cbar0;
  std::map<MultiIndex, GfElem> A;
  const GF* f = nullptr;
  std::vector<Int> gbox;  // generator box for the minimal window a < cbar0
  Window win;             // series window (recorded as truncation metadata)
};

struct Presentation {
  PresForm form = PresForm::LieOverK;
  PresParams params;
  int class_bound = 2;
  std::shared_ptr<const GenTable> tab;
  std::vector<Relation> relations;

  bool operator==(const Presentation& o) const;
};

// closed-form presentation mod C3 on the minimal generator window
// {D_{a,n} : a < cbar0} u {D0} u {l^{(m)}}
Presentation relations_mod_C3(const PresParams& q);

// presentation over a wider window, one relation [D_a, l^{(m)}] - V_a per
// (a, m), plus the D0 and [l,l] relations; input to eliminate_generators
Presentation full_presentation(const PresParams& q, int wt_max);

// eliminate the generators with index > cbar0 using the relations
// [D_a, l^{(m_a)}] = V_a, m_a the smallest valid m; already-minimal
// presentations are returned unchanged
Presentation eliminate_generators(const Presentation& pres);

// characteristic-0 pipeline: A_iota = beta_iota^p, cbar0 = p*cbar2
Presentation char0_presentation(Int p, int N, int n0, const MultiIndex& cbar2,
                                const std::map<MultiIndex, GfElem>& beta, PresForm form,
                                const std::vector<Int>& gbox, const Window& win, const GF* f);

// Lie form -> group form (requires N0 = 1, class 2)
Presentation to_group_form(const Presentation& lie_pres);

} // namespace nas
