#include "nas/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace nas {

bool Gen::operator==(const Gen& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
  case Kind::D0: return true;
  case Kind::D: return a == o.a && n == o.n;
  case Kind::L: return m == o.m;
  }
  return false;
}

bool Gen::operator<(const Gen& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  switch (kind) {
  case Kind::D0: return false;
  case Kind::D: return a < o.a || (a == o.a && n < o.n);
  case Kind::L: return m < o.m;
  }
  return false;
}

std::string Gen::str() const {
  switch (kind) {
  case Kind::D0: return "D0";
  case Kind::D: return n == 0 ? "D" + a.str() : "D" + a.str() + "," + std::to_string(n);
  case Kind::L: return "l(" + std::to_string(m) + ")";
  }
  return "?";
}

int GenTable::weight_of_index(const MultiIndex& a, const MultiIndex& cbar0) {
  if (a.lex_negative()) throw std::domain_error("weight of lex-negative index");
  // unique s >= 1 with (s-1) cbar0 <= a < s cbar0; boundary a = s cbar0 gets s+1
  int s = 1;
  while (!(a < cbar0 * s)) ++s;
  return s;
}

void GenTable::build(const Params& q, std::vector<MultiIndex> indices) {
  p_ = q.p;
  N_ = q.N;
  n0_ = q.n0;
  cbar0_ = q.cbar0;

  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  d_indices_ = indices;

  gens_.push_back(Gen::d0());
  for (const auto& a : indices)
    for (int n = 0; n < n0_; ++n) gens_.push_back(Gen::d(a, n));
  if (q.with_L)
    for (int m = 1; m <= N_; ++m) gens_.push_back(Gen::l(m));
  // canonical order by construction: D0, then D(a,n) lex, then L(m)

  weights_.resize(gens_.size());
  l_ids_.assign(N_ + 1, -1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Gen& g = gens_[i];
    switch (g.kind) {
    case Gen::Kind::D0: id_d0_ = static_cast<int>(i); weights_[i] = 1; break;
    case Gen::Kind::D:
      d_ids_[{g.a.components(), g.n}] = static_cast<int>(i);
      weights_[i] = weight_of_index(g.a, cbar0_);
      break;
    case Gen::Kind::L: l_ids_[g.m] = static_cast<int>(i); weights_[i] = 0; break;
    }
  }
}

std::shared_ptr<const GenTable> GenTable::window(const Params& q) {
  if (q.cbar0.dim() != q.N) throw std::invalid_argument("cbar0 dimension mismatch");
  if (static_cast<int>(q.box.size()) != q.N) throw std::invalid_argument("box dimension mismatch");
  // enumerate a in Z_N^+(p): 0 < a <lex wt_max*cbar0, |a_j| <= box_j
  std::vector<MultiIndex> idx;
  MultiIndex hi = q.cbar0 * q.wt_max;
  std::vector<Int> cur(q.N);
  for (int j = 0; j < q.N; ++j) cur[j] = -q.box[j];
  for (;;) {
    MultiIndex a{std::vector<Int>(cur)};
    if (a.in_Zplus(q.p) && a < hi) idx.push_back(a);
    int j = q.N - 1;
    while (j >= 0 && cur[j] == q.box[j]) {
      cur[j] = -q.box[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  auto t = std::shared_ptr<GenTable>(new GenTable());
  t->build(q, std::move(idx));
  return t;
}

std::shared_ptr<const GenTable> GenTable::explicit_indices(const Params& q,
                                                           const std::vector<MultiIndex>& indices) {
  for (const auto& a : indices)
    if (!a.in_Zplus(q.p)) throw std::invalid_argument("index not in Z_N^+(p): " + a.str());
  auto t = std::shared_ptr<GenTable>(new GenTable());
  t->build(q, indices);
  return t;
}

int GenTable::id_of(const Gen& g) const {
  int i = find(g);
  if (i < 0) throw std::invalid_argument("generator not in universe: " + g.str());
  return i;
}

int GenTable::find(const Gen& g) const {
  switch (g.kind) {
  case Gen::Kind::D0: return id_d0_;
  case Gen::Kind::D: {
    auto it = d_ids_.find({g.a.components(), g.n});
    return it == d_ids_.end() ? -1 : it->second;
  }
  case Gen::Kind::L: return (g.m >= 1 && g.m < static_cast<int>(l_ids_.size())) ? l_ids_[g.m] : -1;
  }
  return -1;
}

int GenTable::id_l(int m) const {
  if (m < 1 || m >= static_cast<int>(l_ids_.size()) || l_ids_[m] < 0)
    throw std::invalid_argument("no L(" + std::to_string(m) + ") in universe");
  return l_ids_[m];
}

int GenTable::sigma_shift(int id, int k) const {
  const Gen& g = gens_[id];
  if (g.kind != Gen::Kind::D) return id;
  int n = ((g.n + k) % n0_ + n0_) % n0_;
  auto it = d_ids_.find({g.a.components(), n});
  return it->second;
}

} // namespace nas
