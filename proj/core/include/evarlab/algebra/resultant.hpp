#pragma once

#include <vector>

#include "evarlab/algebra/polynomial.hpp"

namespace evarlab::algebra {

// Coefficients of p viewed as a polynomial in `var`; index = exponent, values
// are polynomials in the remaining variables (same ring).
std::vector<Polynomial> coefficients_in(const Polynomial& p, VarId var);

// Exact quotient p / d; throws Error when the division is not exact.
Polynomial exact_quotient(const Polynomial& p, const Polynomial& d);

// Sylvester resultant of f and g with respect to `var`.  The determinant is
// evaluated by fraction-free Bareiss elimination, so arithmetic stays in the
// polynomial ring.  When `leading_degenerate` is non-null it is set to true
// if either leading coefficient in `var` is non-constant — specializations
// killing a leading coefficient are the classical caveat where the resultant
// can vanish without a common root.
Polynomial resultant(const Polynomial& f, const Polynomial& g, VarId var,
                     bool* leading_degenerate = nullptr);

}  // namespace evarlab::algebra
