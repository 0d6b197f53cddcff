#pragma once

#include <map>
#include <vector>

#include "nas/multi_index.hpp"
#include "nas/word.hpp"

namespace nas {

// Lyndon word machinery over integer generator ids. A Lyndon word is
// strictly smaller (word-lex) than each of its proper suffixes; bracketing
// by the standard factorization gives the canonical free-Lie basis.

bool is_lyndon(const Word& w);

// standard factorization w = u.v, v the lex-least proper suffix
std::pair<Word, Word> std_factorization(const Word& w);

// expansion of the bracketed Lyndon word in the free associative algebra;
// integer coefficients, leading (lex-least) word is w itself with coeff 1
std::map<Word, Int> lyndon_expand(const Word& w);

} // namespace nas
