#pragma once

#include <cstddef>

#include "evarlab/algebra/groebner.hpp"
#include "evarlab/evar/eigenvalue.hpp"

namespace evarlab::evar {

// Restriction of an eigenvalue variety to a 1/q surgery slope on one
// component: m_K * l_K^q = 1 with the m_K = 1 locus removed (saturation, so
// the result is the closure of the constrained set).
struct SurgerySlice {
  EigenvalueIdeal base;
  std::size_t component = 0;
  int q = 0;
  algebra::Ideal ideal;
};

SurgerySlice surgery_slice(const EigenvalueIdeal& E, std::size_t K, int q,
                           const algebra::GroebnerOptions& opts = {});

// Smallest d in [1, bound] with l_K^d - 1 in the radical of the slice ideal,
// 0 if none.  On a nonempty slice a positive period must not divide the
// slope q; that failing raises ContractViolation.
int slice_period(const SurgerySlice& S, int bound,
                 const algebra::GroebnerOptions& opts = {});

// Slices cut distinct varieties (not radical-equal).
bool slices_distinct(const SurgerySlice& a, const SurgerySlice& b,
                     const algebra::GroebnerOptions& opts = {});

}  // namespace evarlab::evar
