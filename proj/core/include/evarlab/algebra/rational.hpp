#pragma once

#include <gmpxx.h>

#include <string>

namespace evarlab::algebra {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text);

}  // namespace evarlab::algebra
