#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nas {

using Int = std::int64_t;

// Exponent vector a = (a1,...,aN) in Z^N. Ordered lexicographically with
// the first component most significant.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<Int> c) : c_(std::move(c)) {}
  MultiIndex(std::initializer_list<Int> c) : c_(c) {}
  static MultiIndex zero(int n) { return MultiIndex(std::vector<Int>(n, 0)); }

  int dim() const { return static_cast<int>(c_.size()); }
  Int operator[](int i) const { return c_[i]; }
  Int& operator[](int i) { return c_[i]; }
  const std::vector<Int>& components() const { return c_; }

  bool is_zero() const;
  bool lex_positive() const { return !is_zero() && !lex_negative(); }
  bool lex_negative() const;

  // true iff some component is not divisible by p
  bool prime_to(Int p) const;
  bool in_Zplus(Int p) const { return lex_positive() && prime_to(p); }

  bool divisible_by(Int m) const;
  MultiIndex divided_by(Int m) const;
  // largest e >= 0 with p^e dividing every component (requires *this != 0)
  int p_depth(Int p) const;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex operator-() const;
  MultiIndex operator*(Int k) const;
  MultiIndex& operator+=(const MultiIndex& o);

  bool operator==(const MultiIndex& o) const { return c_ == o.c_; }
  // std::vector's lexicographic compare is exactly the lex order we want;
  // dimensions must agree.
  bool operator<(const MultiIndex& o) const;
  bool operator<=(const MultiIndex& o) const { return *this == o || *this < o; }
  bool operator>(const MultiIndex& o) const { return o < *this; }
  bool operator>=(const MultiIndex& o) const { return o <= *this; }

  std::string str() const;
  std::size_t hash() const;

private:
  std::vector<Int> c_;
};

} // namespace nas

template <> struct std::hash<nas::MultiIndex> {
  std::size_t operator()(const nas::MultiIndex& a) const { return a.hash(); }
};
