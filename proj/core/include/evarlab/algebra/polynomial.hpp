#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "evarlab/algebra/monomial.hpp"
#include "evarlab/algebra/order.hpp"
#include "evarlab/algebra/rational.hpp"
#include "evarlab/algebra/ring.hpp"

namespace evarlab::algebra {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Multivariate polynomial over Q.  Terms are stored in a fixed structural
// order (independent of any active monomial order) with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;  // invalid until assigned; ring() is null
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, VarId v, std::uint32_t e = 1);
  static Polynomial term(RingPtr ring, Monomial m, Rational c);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(VarId v) const;
  std::vector<VarId> support() const;  // variables appearing, ascending
  bool supported_on(const std::vector<bool>& keep) const;

  const Term& leading_term(const MonomialOrder& order) const;  // requires nonzero

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Unique scalar multiple with integer coefficients, content 1, and positive
  // leading coefficient under `order`.
  Polynomial normalized(const MonomialOrder& order) const;

  // Full evaluation at rational point (one value per ring variable).
  Rational evaluate(const std::vector<Rational>& point) const;

  // Reinterpret in an extension of the current ring (same leading variables).
  Polynomial lifted(const RingPtr& bigger) const;

  // Canonical text form: terms descending under `order`, explicit signs,
  // e.g. "l1^2*m1^6 - l1*m1^6 + l1 - 1", "3/2*x*y - 2".
  std::string to_string(const MonomialOrder& order) const;
  std::string to_string() const;  // grevlex of own ring

  static Polynomial parse(const RingPtr& ring, std::string_view text);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;  // structural order, descending

  friend Polynomial merge_add(const Polynomial& a, const Polynomial& b,
                              bool negate_b);
};

// Convenience for tests and construction code.
Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace evarlab::algebra
