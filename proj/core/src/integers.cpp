#include "evarlab/algebra/integers.hpp"

#include <algorithm>
#include <cstdlib>

namespace evarlab::algebra {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SmithResult smith_normal_form(Matrix m) {
  SmithResult out;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  if (rows == 0 || cols == 0) return out;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Locate the smallest nonzero entry in the remaining block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (!found || abs_of(m[i][j]) < abs_of(m[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pi]);
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    for (;;) {
      bool dirty = false;
      // Clear the pivot column with remainder steps.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];  // truncated division
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than pivot: promote it
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      // Clear the pivot row likewise.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot now divides its row and column (both cleared).  Enforce the
      // divisibility chain towards the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    if (m[t][t] < 0)
      for (std::size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
  }

  for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    if (m[t][t] != 0) out.divisors.push_back(m[t][t]);
  out.rank = out.divisors.size();
  return out;
}

}  // namespace evarlab::algebra
