#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace nas {

// Word in generator ids, length < p <= 7. Ordered by (length, lex) so that
// graded triangular reduction against Lyndon leading terms works degree by
// degree.
struct Word {
  static constexpr int kCap = 7;
  std::uint8_t len = 0;
  std::array<std::int32_t, kCap> g{};

  Word() { g.fill(0); }
  static Word letter(int id) {
    Word w;
    w.len = 1;
    w.g[0] = id;
    return w;
  }
  static Word concat(const Word& a, const Word& b) {
    Word w;
    w.len = static_cast<std::uint8_t>(a.len + b.len);
    for (int i = 0; i < a.len; ++i) w.g[i] = a.g[i];
    for (int i = 0; i < b.len; ++i) w.g[a.len + i] = b.g[i];
    return w;
  }
  Word slice(int from, int to) const { // [from, to)
    Word w;
    w.len = static_cast<std::uint8_t>(to - from);
    for (int i = from; i < to; ++i) w.g[i - from] = g[i];
    return w;
  }

  bool operator==(const Word& o) const {
    if (len != o.len) return false;
    for (int i = 0; i < len; ++i)
      if (g[i] != o.g[i]) return false;
    return true;
  }
  // graded order: by length, then lex
  bool operator<(const Word& o) const {
    if (len != o.len) return len < o.len;
    for (int i = 0; i < len; ++i)
      if (g[i] != o.g[i]) return g[i] < o.g[i];
    return false;
  }
  // plain word-lex order (prefix smaller than its extensions)
  static bool lex_less(const Word& a, const Word& b) {
    int n = a.len < b.len ? a.len : b.len;
    for (int i = 0; i < n; ++i)
      if (a.g[i] != b.g[i]) return a.g[i] < b.g[i];
    return a.len < b.len;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < len; ++i) {
      if (i) s += ".";
      s += std::to_string(g[i]);
    }
    return s + "]";
  }
};

} // namespace nas
