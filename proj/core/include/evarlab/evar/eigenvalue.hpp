#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evarlab/algebra/groebner.hpp"
#include "evarlab/algebra/ideal.hpp"
#include "evarlab/links/presentation.hpp"
#include "evarlab/rep/abelian.hpp"

namespace evarlab::evar {

// Eigenvalue variety of a link exterior, cut out in the coordinates
// m1, l1, m2, l2, ... of rep::ml_ring (meridian/longitude eigenvalues per
// component).  The ideal is Laurent-normalized: saturated by every m_K, l_K.
struct EigenvalueIdeal {
  algebra::Ideal ideal;
  std::size_t components = 0;
  // Provenance: one entry per eigenvector-chart combination that was
  // eliminated and intersected, plus the unit variables inverted at the end.
  std::vector<std::string> charts_used;
  std::vector<std::string> saturations;
};

// Adjoins, per component K, eigenvalue variables m_K, l_K and a common
// eigenvector v_K for rho(mu_K) and rho(lambda_K) on top of the generic SL2
// assignment for `pres`, then eliminates everything except the m/l variables
// and intersects over eigenvector charts (v_K = (1, y) or (x, 1)).
//
// The first component's eigenvector is pinned at (1, 0): conjugation moves
// any eigenvector line there while fixing all eigenvalues, so the m/l image
// is unchanged, and the other components' eigenvectors still land in one of
// their two charts.  Only those 2^(n-1) chart combinations are run.
//
// Budgets in `opts` apply per Groebner run; a timeout carries the chart
// that failed.  With workers > 1 chart eliminations run concurrently
// (opts.cache must then be thread-safe); the result does not depend on
// workers.
EigenvalueIdeal eigenvalue_ideal(const links::GroupPresentation& pres,
                                 const algebra::GroebnerOptions& opts = {},
                                 std::size_t workers = 1);

// The same ideal presented as the A-ideal: generators that are univariate
// are replaced by their squarefree parts, and the list is canonically
// sorted.  Everything downstream compares up to radical, so this is a
// normal form, not new information.
algebra::Ideal a_ideal(const EigenvalueIdeal& E);

// Image of the ideal under (m_K, l_K) -> (m_K^-1, l_K^-1) for the selected
// components (every component in the overload), with denominators cleared.
// a_ideal output is one convention for the eigenvalue pairs; comparisons
// against external data may need the other one.
algebra::Ideal invert_components(const algebra::Ideal& ideal,
                                 const std::vector<bool>& which);
algebra::Ideal invert_components(const algebra::Ideal& ideal);

// dim V(E) <= number of components (Tillmann's bound); run as a sanity gate
// after every eigenvalue-ideal computation.
bool tillmann_bound_check(const EigenvalueIdeal& E,
                          const algebra::GroebnerOptions& opts = {});

// tr(rho(mu_K lambda_K^q)) - 2 over the matrix assignment of `pres`: the
// character-level form of the surgery condition, used to cross-validate
// surgery slices through an independent pipeline.
algebra::Polynomial character_surgery_constraint(
    const links::GroupPresentation& pres, std::size_t K, int q);

}  // namespace evarlab::evar
