#include "nas/multi_index.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nas {

bool MultiIndex::is_zero() const {
  for (Int x : c_)
    if (x != 0) return false;
  return true;
}

bool MultiIndex::lex_negative() const {
  for (Int x : c_) {
    if (x < 0) return true;
    if (x > 0) return false;
  }
  return false;
}

bool MultiIndex::prime_to(Int p) const {
  for (Int x : c_)
    if (x % p != 0) return true;
  return false;
}

bool MultiIndex::divisible_by(Int m) const {
  for (Int x : c_)
    if (x % m != 0) return false;
  return true;
}

MultiIndex MultiIndex::divided_by(Int m) const {
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] % m != 0) throw std::domain_error("MultiIndex: not divisible by " + std::to_string(m));
    r[i] = c_[i] / m;
  }
  return MultiIndex(std::move(r));
}

int MultiIndex::p_depth(Int p) const {
  if (is_zero()) throw std::domain_error("MultiIndex::p_depth on zero index");
  int e = 0;
  MultiIndex a = *this;
  while (a.divisible_by(p)) {
    a = a.divided_by(p);
    ++e;
  }
  return e;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  assert(dim() == o.dim());
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  assert(dim() == o.dim());
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-() const {
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator*(Int k) const {
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return MultiIndex(std::move(r));
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  assert(dim() == o.dim());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  assert(dim() == o.dim());
  return c_ < o.c_;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::size_t MultiIndex::hash() const {
  std::size_t h = c_.size();
  for (Int x : c_) h ^= std::hash<Int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

} // namespace nas
