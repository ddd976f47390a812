#include "evarlab/evar/slice.hpp"

#include <cstdint>
#include <string>

#include "evarlab/algebra/ideal_ops.hpp"
#include "evarlab/errors.hpp"

namespace evarlab::evar {

using algebra::GroebnerOptions;
using algebra::Polynomial;

SurgerySlice surgery_slice(const EigenvalueIdeal& E, std::size_t K, int q,
                           const GroebnerOptions& opts) {
  if (K >= E.components)
    throw Error("surgery_slice: no component " + std::to_string(K));
  const auto& ring = E.ideal.ring;
  Polynomial m = Polynomial::variable(ring, rep::m_var(K));
  Polynomial l = Polynomial::variable(ring, rep::l_var(K));
  Polynomial one = Polynomial::one(ring);
  // m * l^q = 1 with negative powers cleared to the other side.
  Polynomial rel = q >= 0 ? m * l.pow(static_cast<std::uint32_t>(q)) - one
                          : m - l.pow(static_cast<std::uint32_t>(-q));
  algebra::Ideal cut = E.ideal;
  cut.add(rel);
  GroebnerOptions step = opts;
  step.stage = "surgery slice saturation";
  cut = algebra::saturate(cut, m - one, step);
  return {E, K, q, std::move(cut)};
}

int slice_period(const SurgerySlice& S, int bound,
                 const GroebnerOptions& opts) {
  if (bound < 1) throw Error("slice_period: bound must be >= 1");
  bool empty = algebra::is_unit_ideal(S.ideal, opts);
  Polynomial l = Polynomial::variable(S.ideal.ring, rep::l_var(S.component));
  Polynomial one = Polynomial::one(S.ideal.ring);
  for (int d = 1; d <= bound; ++d) {
    if (!algebra::radical_membership(l.pow(static_cast<std::uint32_t>(d)) - one,
                                     S.ideal, opts))
      continue;
    if (!empty && S.q % d == 0)
      throw ContractViolation("slice_period: period " + std::to_string(d) +
                              " divides its own slope " + std::to_string(S.q));
    return d;
  }
  return 0;
}

bool slices_distinct(const SurgerySlice& a, const SurgerySlice& b,
                     const GroebnerOptions& opts) {
  return !algebra::radical_equal(a.ideal, b.ideal, opts);
}

}  // namespace evarlab::evar
