#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace evarlab::links {

// Group words over indexed generators: (generator index, nonzero exponent),
// multiplied left to right.  Adjacent letters with the same generator are
// merged by the reduction helpers.
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);  // free reduction plus conjugation trimming
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// Replace generator `gen` by `replacement` (inverted for negative letters).
// The result is freely reduced.
Word substitute(const Word& w, int gen, const Word& replacement);

// Exponent-sum vector (abelianization image).
std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t ngens);

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& names);

}  // namespace evarlab::links
