#pragma once

#include <string>
#include <vector>

#include "evarlab/algebra/groebner.hpp"
#include "evarlab/evar/eigenvalue.hpp"

namespace evarlab::evar {

// Outcome of the maximality test.  `residual` is what is left of the
// eigenvalue variety after removing everything inside an abelian sheet; the
// verdict is whether a full-dimensional piece survives.
struct MaximalityReport {
  algebra::Ideal residual;
  int dimension = -1;  // of V(residual)
  bool verdict = false;
  std::vector<std::string> sigma_labels;  // canonical sign vectors, e.g. "++-"
  // Whether V(E) lies entirely inside the corresponding abelian sheet.
  std::vector<bool> contained_in_sigma;
};

// Saturates E's ideal by each canonical abelian sheet for the given linking
// matrix.  A component of V(E) survives iff it is contained in no sheet,
// i.e. iff it lies outside the abelian eigenvalue variety; the verdict is
// dim(residual) == number of components.  Expects E Laurent-normalized
// (eigenvalue_ideal output is).
MaximalityReport detect_nontrivially_maximal(
    const EigenvalueIdeal& E, const std::vector<std::vector<int>>& lk,
    const algebra::GroebnerOptions& opts = {});

}  // namespace evarlab::evar
