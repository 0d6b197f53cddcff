#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nas/multi_index.hpp"

namespace nas {

// Generator of the free nilpotent Lie algebra:
//   D0, D(a,n) with a in Z_N^+(p) and n mod N0, L(m) for 1 <= m <= N.
// Canonical order: D0 < D(a,n) (lex on (a,n)) < L(m) (by m).
struct Gen {
  enum class Kind { D0, D, L };
  Kind kind = Kind::D0;
  MultiIndex a; // D only
  int n = 0;    // D only
  int m = 0;    // L only

  static Gen d0() { return Gen{Kind::D0, {}, 0, 0}; }
  static Gen d(MultiIndex a, int n) { return Gen{Kind::D, std::move(a), n, 0}; }
  static Gen l(int m) { return Gen{Kind::L, {}, 0, m}; }

  bool operator==(const Gen& o) const;
  bool operator<(const Gen& o) const;
  std::string str() const;
};

// Finite generator universe: a window of D-indices plus D0 and optionally
// the L(m). Immutable once built; generator ids are canonical-order ranks.
class GenTable {
public:
  struct Params {
    Int p = 0;
    int N = 0;
    int n0 = 1;
    MultiIndex cbar0;
    int wt_max = 2;         // D-indices a with a <lex wt_max * cbar0
    std::vector<Int> box;   // |a_j| <= box_j
    bool with_L = true;
  };

  static std::shared_ptr<const GenTable> window(const Params& q);
  static std::shared_ptr<const GenTable> explicit_indices(const Params& q,
                                                          const std::vector<MultiIndex>& indices);

  Int p() const { return p_; }
  int N() const { return N_; }
  int n0() const { return n0_; }
  const MultiIndex& cbar0() const { return cbar0_; }

  int size() const { return static_cast<int>(gens_.size()); }
  const Gen& gen(int id) const { return gens_[id]; }
  int id_of(const Gen& g) const;      // throws if absent
  int find(const Gen& g) const;       // -1 if absent
  bool has_index(const MultiIndex& a) const { return find(Gen::d(a, 0)) >= 0; }

  int id_d0() const { return id_d0_; }
  int id_l(int m) const;
  const std::vector<MultiIndex>& d_indices() const { return d_indices_; } // sorted lex

  // weight: D0 -> 1; D(a,n) -> s with (s-1)cbar0 <= a < s cbar0; L -> 0
  int weight(int id) const { return weights_[id]; }
  static int weight_of_index(const MultiIndex& a, const MultiIndex& cbar0);

  // sigma: D(a,n) -> D(a,n+k mod N0); D0, L fixed
  int sigma_shift(int id, int k) const;

private:
  GenTable() = default;
  void build(const Params& q, std::vector<MultiIndex> indices);

  Int p_ = 0;
  int N_ = 0;
  int n0_ = 1;
  MultiIndex cbar0_;
  std::vector<Gen> gens_;
  std::vector<int> weights_;
  std::vector<MultiIndex> d_indices_;
  std::map<std::pair<std::vector<Int>, int>, int> d_ids_;
  int id_d0_ = -1;
  std::vector<int> l_ids_;
};

} // namespace nas
