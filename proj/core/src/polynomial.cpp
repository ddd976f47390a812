#include "evarlab/algebra/polynomial.hpp"

#include <algorithm>
#include <map>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

namespace {

// Storage invariant: terms descending under structural_compare.
struct StructBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::structural_compare(a, b) > 0;
  }
};

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, VarId v, std::uint32_t e) {
  Polynomial p(std::move(ring));
  if (v >= p.ring_->size()) throw Error("variable id out of range");
  p.terms_.push_back({Monomial::var(v, e), 1});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Monomial, Rational, StructBefore> acc;
  for (auto& t : terms) acc[t.mono] += t.coeff;
  Polynomial p(std::move(ring));
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::vector<VarId> Polynomial::support() const {
  std::vector<bool> seen(ring_->size(), false);
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.entries()) seen[v] = true;
  std::vector<VarId> out;
  for (VarId v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool Polynomial::supported_on(const std::vector<bool>& keep) const {
  for (const auto& t : terms_)
    if (!t.mono.supported_on(keep)) return false;
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (order.greater(terms_[i].mono, best->mono)) best = &terms_[i];
  return *best;
}

Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool negate_b) {
  require_same_ring(a.ring_, b.ring_, "addition");
  Polynomial out(a.ring_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    int cmp;
    if (ia == a.terms_.end())
      cmp = -1;
    else if (ib == b.terms_.end())
      cmp = 1;
    else
      cmp = Monomial::structural_compare(ia->mono, ib->mono);
    if (cmp > 0) {
      out.terms_.push_back(*ia++);
    } else if (cmp < 0) {
      out.terms_.push_back({ib->mono, negate_b ? Rational(-ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Rational c = negate_b ? Rational(ia->coeff - ib->coeff)
                            : Rational(ia->coeff + ib->coeff);
      if (c != 0) out.terms_.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  return merge_add(*this, rhs, false);
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return merge_add(*this, rhs, true);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  *this = merge_add(*this, rhs, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  *this = merge_add(*this, rhs, true);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_ring(ring_, rhs.ring_, "multiplication");
  std::map<Monomial, Rational, StructBefore> acc;
  for (const auto& ta : terms_)
    for (const auto& tb : rhs.terms_) {
      Monomial m = ta.mono * tb.mono;
      acc[std::move(m)] += ta.coeff * tb.coeff;
    }
  Polynomial out(ring_);
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(ring_);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return zero(ring_);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  // Multiplying by a fixed monomial preserves the structural order.
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial out = one(ring_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != rhs.terms_[i].mono ||
        terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::normalized(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Integer den = 1;
  for (const auto& t : terms_) den = lcm(den, t.coeff.get_den());
  Integer content = 0;
  for (const auto& t : terms_) {
    Integer num = t.coeff.get_num() * (den / t.coeff.get_den());
    content = gcd(content, num);
  }
  Rational scale(den, content);  // canonicalized by mpq_class
  scale.canonicalize();
  if (leading_term(order).coeff * scale < 0) scale = -scale;
  return scaled(scale);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->size())
    throw Error("evaluation point arity mismatch");
  Rational out = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [var, e] : t.mono.entries()) {
      Rational p = 1;
      for (std::uint32_t i = 0; i < e; ++i) p *= point[var];
      v *= p;
    }
    out += v;
  }
  return out;
}

Polynomial Polynomial::lifted(const RingPtr& bigger) const {
  if (bigger->size() < ring_->size())
    throw RingMismatch("lift target smaller than source ring");
  for (VarId v = 0; v < ring_->size(); ++v)
    if (bigger->name(v) != ring_->name(v))
      throw RingMismatch("lift target is not an extension of the source ring");
  Polynomial out(bigger);
  out.terms_ = terms_;
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  return p.scaled(c);
}

}  // namespace evarlab::algebra
