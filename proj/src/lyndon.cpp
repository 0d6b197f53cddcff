#include "nas/lyndon.hpp"

#include <stdexcept>

namespace nas {

bool is_lyndon(const Word& w) {
  if (w.len == 0) return false;
  for (int i = 1; i < w.len; ++i) {
    Word suf = w.slice(i, w.len);
    if (!Word::lex_less(w, suf)) return false;
  }
  return true;
}

std::pair<Word, Word> std_factorization(const Word& w) {
  if (w.len < 2) throw std::invalid_argument("std_factorization needs length >= 2");
  int best = 1;
  for (int i = 2; i < w.len; ++i)
    if (Word::lex_less(w.slice(i, w.len), w.slice(best, w.len))) best = i;
  return {w.slice(0, best), w.slice(best, w.len)};
}

std::map<Word, Int> lyndon_expand(const Word& w) {
  if (w.len == 1) return {{w, 1}};
  auto [u, v] = std_factorization(w);
  auto eu = lyndon_expand(u);
  auto ev = lyndon_expand(v);
  std::map<Word, Int> r;
  for (const auto& [a, ca] : eu)
    for (const auto& [b, cb] : ev) {
      r[Word::concat(a, b)] += ca * cb;
      r[Word::concat(b, a)] -= ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

} // namespace nas
