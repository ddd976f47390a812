#pragma once

#include <cstddef>
#include <vector>

#include "evarlab/algebra/groebner.hpp"
#include "evarlab/algebra/ideal.hpp"

namespace evarlab::rep {

// Per-component lift choice for the 2:1 eigenvalue map; sigma and -sigma give
// the same torus, so the first entry is pinned to +1.
using SignVector = std::vector<int>;

std::vector<SignVector> canonical_sign_vectors(std::size_t ncomp);

// Eigenvalue coordinate ring m1, l1, m2, l2, ...
algebra::RingPtr ml_ring(std::size_t ncomp);
algebra::VarId m_var(std::size_t component);  // 2K
algebra::VarId l_var(std::size_t component);  // 2K + 1

// One torus of abelian-representation eigenvalues: for each component K the
// relation l_K = prod_{K'!=K} m_{K'}^(sigma_K sigma_K' lk(K,K')), with
// negative exponents cleared to the l side.  Generators are binomials, so the
// ideal is already saturated in the torus coordinates.
algebra::Ideal abelian_ideal(const std::vector<std::vector<int>>& lk,
                             const SignVector& sigma,
                             const algebra::RingPtr& ring);
algebra::Ideal abelian_ideal(const std::vector<std::vector<int>>& lk,
                             const SignVector& sigma);

// Union over all canonical sign vectors (ideal intersection).
algebra::Ideal abelian_evar_ideal(const std::vector<std::vector<int>>& lk,
                                  const algebra::GroebnerOptions& opts = {});

}  // namespace evarlab::rep
