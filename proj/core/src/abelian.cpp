#include "evarlab/rep/abelian.hpp"

#include <string>

#include "evarlab/algebra/ideal_ops.hpp"
#include "evarlab/errors.hpp"

namespace evarlab::rep {

using algebra::Ideal;
using algebra::Polynomial;
using algebra::RingPtr;
using algebra::VarId;

std::vector<SignVector> canonical_sign_vectors(std::size_t ncomp) {
  if (ncomp == 0) return {SignVector{}};
  std::vector<SignVector> out;
  std::size_t masks = std::size_t{1} << (ncomp - 1);
  out.reserve(masks);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    SignVector sigma(ncomp, 1);
    for (std::size_t k = 1; k < ncomp; ++k)
      if (mask & (std::size_t{1} << (k - 1))) sigma[k] = -1;
    out.push_back(std::move(sigma));
  }
  return out;
}

RingPtr ml_ring(std::size_t ncomp) {
  std::vector<std::string> names;
  names.reserve(2 * ncomp);
  for (std::size_t k = 1; k <= ncomp; ++k) {
    names.push_back("m" + std::to_string(k));
    names.push_back("l" + std::to_string(k));
  }
  return algebra::make_ring(std::move(names));
}

VarId m_var(std::size_t component) { return static_cast<VarId>(2 * component); }

VarId l_var(std::size_t component) {
  return static_cast<VarId>(2 * component + 1);
}

namespace {

void check_sigma(const std::vector<std::vector<int>>& lk,
                 const SignVector& sigma) {
  if (sigma.size() != lk.size())
    throw Error("abelian_ideal: sign vector size mismatch");
  for (std::size_t k = 0; k < sigma.size(); ++k)
    if (sigma[k] != 1 && sigma[k] != -1)
      throw Error("abelian_ideal: sign entries must be +1 or -1");
  if (!sigma.empty() && sigma[0] != 1)
    throw Error("abelian_ideal: sign vector not canonical (first entry -1)");
}

}  // namespace

Ideal abelian_ideal(const std::vector<std::vector<int>>& lk,
                    const SignVector& sigma, const RingPtr& ring) {
  check_sigma(lk, sigma);
  std::size_t n = lk.size();
  Ideal ideal(ring);
  for (std::size_t K = 0; K < n; ++K) {
    Polynomial lhs = Polynomial::variable(ring, l_var(K));
    Polynomial rhs = Polynomial::one(ring);
    for (std::size_t J = 0; J < n; ++J) {
      if (J == K) continue;
      int e = sigma[K] * sigma[J] * lk[K][J];
      if (e > 0)
        rhs *= Polynomial::variable(ring, m_var(J), static_cast<uint32_t>(e));
      else if (e < 0)
        lhs *= Polynomial::variable(ring, m_var(J), static_cast<uint32_t>(-e));
    }
    ideal.add(lhs - rhs);
  }
  std::vector<VarId> units;
  for (VarId v = 0; v < static_cast<VarId>(2 * n); ++v) units.push_back(v);
  return laurent_normalize(ideal, units);
}

Ideal abelian_ideal(const std::vector<std::vector<int>>& lk,
                    const SignVector& sigma) {
  return abelian_ideal(lk, sigma, ml_ring(lk.size()));
}

Ideal abelian_evar_ideal(const std::vector<std::vector<int>>& lk,
                         const algebra::GroebnerOptions& opts) {
  RingPtr ring = ml_ring(lk.size());
  Ideal acc;
  bool first = true;
  for (const auto& sigma : canonical_sign_vectors(lk.size())) {
    Ideal next = abelian_ideal(lk, sigma, ring);
    if (first) {
      acc = std::move(next);
      first = false;
    } else {
      acc = ideal_intersection(acc, next, opts);
    }
  }
  return acc;
}

}  // namespace evarlab::rep
