#include "evarlab/algebra/resultant.hpp"

#include <algorithm>

#include "evarlab/algebra/order.hpp"
#include "evarlab/errors.hpp"

namespace evarlab::algebra {

std::vector<Polynomial> coefficients_in(const Polynomial& p, VarId var) {
  const RingPtr& ring = p.ring();
  std::uint64_t deg = p.degree_in(var);
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(var);
    std::vector<Monomial::Entry> rest;
    for (const auto& en : t.mono.entries())
      if (en.first != var) rest.push_back(en);
    buckets[e].push_back({Monomial::from_entries(std::move(rest)), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets)
    out.push_back(Polynomial::from_terms(ring, std::move(b)));
  return out;
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& d) {
  require_same_ring(p.ring(), d.ring(), "exact_quotient");
  if (d.is_zero()) throw Error("exact_quotient: division by zero");
  if (p.is_zero()) return Polynomial::zero(p.ring());
  MonomialOrder order = MonomialOrder::grevlex(p.ring());
  const Term& dl = d.leading_term(order);

  Polynomial rem = p;
  Polynomial quot = Polynomial::zero(p.ring());
  while (!rem.is_zero()) {
    const Term& rl = rem.leading_term(order);
    auto q = dl.mono.divide_into(rl.mono);
    if (!q) throw Error("exact_quotient: division is not exact");
    Rational c = rl.coeff / dl.coeff;
    Polynomial piece = Polynomial::term(p.ring(), *q, c);
    quot += piece;
    rem -= d.times_term(*q, c);
  }
  return quot;
}

namespace {

// Determinant of a square polynomial matrix by Bareiss fraction-free
// elimination; divisions are exact by construction.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m,
                               const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::one(ring);
  int sign = 1;
  Polynomial prev = Polynomial::one(ring);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial::zero(ring);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial::zero(ring);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, VarId var,
                     bool* leading_degenerate) {
  require_same_ring(f.ring(), g.ring(), "resultant");
  const RingPtr& ring = f.ring();
  if (leading_degenerate) *leading_degenerate = false;
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(ring);

  std::vector<Polynomial> fc = coefficients_in(f, var);
  std::vector<Polynomial> gc = coefficients_in(g, var);
  std::size_t df = fc.size() - 1, dg = gc.size() - 1;

  if (leading_degenerate && (!fc.back().is_constant() || !gc.back().is_constant()))
    *leading_degenerate = true;

  if (df == 0 && dg == 0) return Polynomial::one(ring);
  if (df == 0) return fc[0].pow(dg);
  if (dg == 0) return gc[0].pow(df);

  std::size_t n = df + dg;
  std::vector<std::vector<Polynomial>> syl(
      n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k)
      syl[r][r + k] = fc[df - k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k)
      syl[dg + r][r + k] = gc[dg - k];

  return bareiss_determinant(std::move(syl), ring);
}

}  // namespace evarlab::algebra
