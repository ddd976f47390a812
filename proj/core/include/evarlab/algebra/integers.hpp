#pragma once

#include <cstddef>
#include <vector>

#include "evarlab/algebra/rational.hpp"

namespace evarlab::algebra {

struct SmithResult {
  // Nonnegative diagonal entries with d1 | d2 | ... ; zeros omitted.
  std::vector<Integer> divisors;
  std::size_t rank = 0;  // == divisors.size()
};

// Smith normal form of an integer matrix (row-major, possibly empty or
// ragged-free rectangular).  Only the diagonal is reported.
SmithResult smith_normal_form(std::vector<std::vector<Integer>> m);

}  // namespace evarlab::algebra
