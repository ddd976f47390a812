#include "evarlab/evar/eigenvalue.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <optional>
#include <utility>

#include "evarlab/algebra/ideal_ops.hpp"
#include "evarlab/errors.hpp"
#include "evarlab/rep/representation.hpp"

namespace evarlab::evar {

using algebra::GroebnerOptions;
using algebra::Ideal;
using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::Polynomial;
using algebra::Rational;
using algebra::RingPtr;
using algebra::Term;
using algebra::VarId;
using links::Word;

namespace {

// w = p . q with the letter count split as evenly as possible.  Working with
// the halves keeps the equation degrees near |w|/2 instead of |w|, which is
// the difference between chart eliminations finishing in milliseconds and
// not finishing at all.
void split_word(const Word& w, Word& p, Word& q) {
  std::size_t total = 0;
  for (const auto& [g, e] : w) total += e < 0 ? -e : e;
  std::size_t acc = 0;
  for (const auto& [g, e] : w) {
    int mag = e < 0 ? -e : e, sgn = e < 0 ? -1 : 1;
    for (int i = 0; i < mag; ++i) {
      (acc < (total + 1) / 2 ? p : q).push_back({g, sgn});
      ++acc;
    }
  }
}

// p with v replaced by f (cached powers; v must not occur in f).
Polynomial subst_var(const Polynomial& p, VarId v, const Polynomial& f) {
  if (p.degree_in(v) == 0) return p;
  std::vector<Polynomial> powers = {Polynomial::one(p.ring())};
  Polynomial out = Polynomial::zero(p.ring());
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(v);
    std::vector<Monomial::Entry> rest;
    for (const auto& en : t.mono.entries())
      if (en.first != v) rest.push_back(en);
    while (powers.size() <= e) powers.push_back(powers.back() * f);
    out += powers[e].times_term(Monomial::from_entries(std::move(rest)), t.coeff);
  }
  return out;
}

// Exact linear elimination: while some generator contains a variable >= cut
// in exactly one term, that term being c*v alone, substitute
// v = -(g - c v)/c everywhere and drop g and v.  k[vars]/(v - f) is
// k[vars minus v], so the elimination ideal over the first `cut` variables
// is unchanged.  Smallest substitute first keeps growth down.
void presolve(std::vector<Polynomial>& gens, VarId cut) {
  static const bool trace = std::getenv("EVARLAB_GB_TRACE") != nullptr;
  for (;;) {
    if (trace) {
      std::size_t total = 0;
      for (const auto& g : gens) total += g.term_count();
      std::fprintf(stderr, "[presolve] gens=%zu terms=%zu\n", gens.size(),
                   total);
    }
    std::size_t best_g = SIZE_MAX, best_sz = SIZE_MAX;
    VarId best_v = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Polynomial& g = gens[gi];
      if (g.is_zero()) continue;
      for (const auto& t : g.terms()) {
        const auto& en = t.mono.entries();
        if (en.size() != 1 || en[0].second != 1 || en[0].first < cut) continue;
        VarId v = en[0].first;
        bool lone = true;  // no other term may touch v
        for (const auto& u : g.terms())
          if (&u != &t && u.mono.exponent(v) > 0) {
            lone = false;
            break;
          }
        if (!lone) continue;
        // Substituting f with fsz terms into x^e costs ~fsz^e terms; only
        // take cheap substitutions, the basis handles the rest.
        std::size_t fsz = g.term_count() - 1;
        std::uint32_t maxexp = 0;
        for (std::size_t gj = 0; gj < gens.size(); ++gj)
          if (gj != gi)
            maxexp = std::max(
                maxexp, static_cast<std::uint32_t>(gens[gj].degree_in(v)));
        double cost = 1;
        for (std::uint32_t k = 0; k < maxexp; ++k) cost *= std::max<std::size_t>(fsz, 1);
        if (cost > 2000) continue;
        if (fsz < best_sz) {
          best_sz = fsz;
          best_g = gi;
          best_v = v;
        }
      }
    }
    if (best_g == SIZE_MAX) return;
    Polynomial g = gens[best_g];
    Rational c;
    for (const auto& t : g.terms())
      if (t.mono == Monomial::var(best_v)) c = t.coeff;
    Polynomial f =
        (g - Polynomial::variable(g.ring(), best_v).scaled(c)).scaled(-1 / c);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(best_g));
    for (auto& p : gens) p = subst_var(p, best_v, f);
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  }
}

// "K1:A,K2:B,...": chart per component; bit k-1 of mask flips K(k+1) to the
// (x, 1) chart.  Component 1 always uses chart A, with its eigenvector
// pinned at (1, 0): conjugation moves any eigenvector line there without
// touching eigenvalues, so the projection to the m/l coordinates is the
// same and the remaining components still only need their two charts.
std::string chart_label(std::size_t n, std::size_t mask) {
  std::string out;
  for (std::size_t K = 0; K < n; ++K) {
    if (K) out += ',';
    bool b = K > 0 && (mask >> (K - 1)) & 1;
    out += 'K';
    out += std::to_string(K + 1);
    out += b ? ":B" : ":A";
  }
  return out;
}

// Builds and eliminates one chart system; returns its contribution to the
// eigenvalue ideal, restricted to the m/l ring.
Ideal chart_ideal(const links::GroupPresentation& pres, std::size_t mask,
                  const RingPtr& mlring, const GroebnerOptions& opts) {
  std::size_t n = pres.peripherals.size();
  std::vector<std::string> vars = mlring->names();
  for (const auto& g : pres.generators)
    for (const char* p : {"a_", "b_", "c_", "d_"}) vars.push_back(p + g);
  std::vector<VarId> evec;  // one variable per component after the first
  std::vector<bool> chart_b(n, false);
  for (std::size_t K = 1; K < n; ++K) {
    chart_b[K] = (mask >> (K - 1)) & 1;
    evec.push_back(static_cast<VarId>(vars.size()));
    vars.push_back((chart_b[K] ? "vx" : "vy") + std::to_string(K + 1));
  }
  RingPtr ring = algebra::make_ring(std::move(vars));

  rep::MatrixAssignment asg{ring, pres.generators};
  Ideal sys(ring);
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    sys.add(asg.det_relation(g));
  // Relator r = p.q enters as rho(p) = rho(q^-1): same ideal as
  // rho(r) = id modulo the determinant relations (multiply by the adjugate
  // of either side), at half the degree.
  for (const auto& r : pres.relators) {
    Word p, q;
    split_word(r, p, q);
    rep::PolyMat2 lhs = rep::word_matrix(p, asg);
    rep::PolyMat2 rhs = rep::word_matrix(links::inverse(q), asg);
    sys.add(lhs.a - rhs.a);
    sys.add(lhs.b - rhs.b);
    sys.add(lhs.c - rhs.c);
    sys.add(lhs.d - rhs.d);
  }
  for (std::size_t K = 0; K < n; ++K) {
    // the first component's eigenvector is (1, 0); the others carry a chart
    // coordinate
    Polynomial v = K == 0 ? Polynomial::zero(ring)
                          : Polynomial::variable(ring, evec[K - 1]);
    const Word* words[2] = {&pres.peripherals[K].meridian,
                            &pres.peripherals[K].longitude};
    Polynomial vals[2] = {Polynomial::variable(ring, rep::m_var(K)),
                          Polynomial::variable(ring, rep::l_var(K))};
    for (int i = 0; i < 2; ++i) {
      // rho(w) v = val v, rebalanced as rho(q) v = val rho(p^-1) v.
      Word p, q;
      split_word(*words[i], p, q);
      rep::PolyMat2 Q = rep::word_matrix(q, asg);
      rep::PolyMat2 P = rep::word_matrix(links::inverse(p), asg);
      if (chart_b[K]) {  // eigenvector (x, 1)
        sys.add(Q.a * v + Q.b - vals[i] * (P.a * v + P.b));
        sys.add(Q.c * v + Q.d - vals[i] * (P.c * v + P.d));
      } else {  // eigenvector (1, y)
        sys.add(Q.a + Q.b * v - vals[i]* (P.a + P.b * v));
        sys.add(Q.c + Q.d * v - vals[i] * (P.c + P.d * v));
      }
      // Characteristic-polynomial seed: det(rho(w) - val id), an exact
      // combination of the two equations above (coefficients d - val and -b,
      // resp. a - val and -c).  Redundant but it hands the basis the crucial
      // low-degree relation between val and the matrix entries up front.
      rep::PolyMat2 W = rep::word_matrix(*words[i], asg);
      sys.add(vals[i] * vals[i] - W.trace() * vals[i] + W.det());
    }
  }

  presolve(sys.gens, static_cast<VarId>(2 * n));

  // Eliminate eigenvector variables first, then matrix entries.
  std::vector<VarId> mlvars, matvars;
  for (VarId v = 0; v < 2 * n; ++v) mlvars.push_back(v);
  for (VarId v = static_cast<VarId>(2 * n);
       v < static_cast<VarId>(2 * n + 4 * pres.generators.size()); ++v)
    matvars.push_back(v);
  std::vector<std::vector<VarId>> blocks;
  if (!evec.empty()) blocks.push_back(evec);
  if (!matvars.empty()) blocks.push_back(std::move(matvars));
  blocks.push_back(mlvars);
  MonomialOrder order = MonomialOrder::blocks(ring, std::move(blocks));

  GroebnerOptions chart_opts = opts;
  std::string stage = "eigenvalue chart " + chart_label(n, mask);
  chart_opts.stage = stage.c_str();
  algebra::GroebnerBasis gb = algebra::buchberger(sys, order, chart_opts);

  std::vector<bool> keep(ring->size(), false);
  for (VarId v = 0; v < 2 * n; ++v) keep[v] = true;
  Ideal kept(ring);
  for (const auto& p : gb.elements)
    if (p.supported_on(keep)) kept.add(p);
  return algebra::restrict_to(kept, mlring);
}

// ---- dedicated path for two-generator knot presentations ----
//
// One relator, two generators, one component: the variety splits exactly
// into the reducible locus (shared eigenline, conjugated upper triangular)
// and the closure of the irreducible locus in Riley's normal form.  Both
// systems are tiny compared to the generic chart systems, whose
// intermediate bases blow up already for the figure-eight knot.

// Word product over explicitly given generator matrices; the adjugate
// stands in for the inverse, exact modulo the determinant relations.
rep::PolyMat2 eval_word(const Word& w, const rep::PolyMat2 mats[2],
                        const RingPtr& ring) {
  rep::PolyMat2 out = rep::PolyMat2::identity(ring);
  for (const auto& [g, e] : w) {
    rep::PolyMat2 m = mats[g];
    if (e < 0) m = m.adjugate();
    for (int i = 0, mag = e < 0 ? -e : e; i < mag; ++i) out = out * m;
  }
  return out;
}

std::size_t letter_count(const Word& w) {
  std::size_t n = 0;
  for (const auto& [g, e] : w) n += static_cast<std::size_t>(e < 0 ? -e : e);
  return n;
}

// Monomial content and sign stripped.  Scaled-matrix entry equations carry
// spurious powers of s that would otherwise pin components at s = 0.
Polynomial stripped(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  Monomial g = p.terms()[0].mono;
  for (const auto& t : p.terms()) g = Monomial::gcd(g, t.mono);
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms())
    out.push_back({*g.divide_into(t.mono), t.coeff});
  return Polynomial::from_terms(p.ring(), std::move(out)).normalized(ord);
}

// mu = conj^-1 . g_core^exp . conj with exp = +-1, or nullopt.
struct MeridianShape {
  std::size_t core = 0;
  int exp = 1;
  Word conj;
};

std::optional<MeridianShape> peel_meridian(const Word& mu) {
  Word m = links::free_reduce(mu);
  MeridianShape out;
  while (m.size() > 1 && m.front().first == m.back().first &&
         m.front().second == -m.back().second) {
    out.conj.insert(out.conj.begin(), m.back());
    m.erase(m.begin());
    m.pop_back();
  }
  if (m.size() != 1 || (m[0].second != 1 && m[0].second != -1))
    return std::nullopt;
  out.core = static_cast<std::size_t>(m[0].first);
  out.exp = m[0].second;
  return out;
}

Ideal keep_ml(const algebra::GroebnerBasis& gb, const RingPtr& ring,
              const RingPtr& mlring) {
  std::vector<bool> keep(ring->size(), false);
  keep[0] = keep[1] = true;
  Ideal kept(ring);
  for (const auto& p : gb.elements)
    if (p.supported_on(keep)) kept.add(p);
  return algebra::restrict_to(kept, mlring);
}

// Reducible locus: conjugate the invariant line to (1, 0); every word
// matrix is then upper triangular and the peripheral eigenvalues sit in the
// (0, 0) entries.  The pairs a second shared eigenvector would contribute
// are (1/m, 1), which the diagonal representations already produce at
// (1, 0), so this single chart covers the whole locus.
Ideal triangular_branch(const links::GroupPresentation& pres,
                        const RingPtr& mlring, const GroebnerOptions& opts) {
  std::vector<std::string> vars = mlring->names();
  for (const auto& g : pres.generators)
    for (const char* p : {"a_", "b_", "d_"}) vars.push_back(p + g);
  RingPtr ring = algebra::make_ring(std::move(vars));
  auto tv = [&](std::size_t g, int k) {  // k: 0 = a, 1 = b, 2 = d
    return Polynomial::variable(ring, static_cast<VarId>(2 + 3 * g + k));
  };
  rep::PolyMat2 mats[2];
  Ideal sys(ring);
  for (std::size_t g = 0; g < 2; ++g) {
    mats[g] = {tv(g, 0), tv(g, 1), Polynomial::zero(ring), tv(g, 2)};
    sys.add(tv(g, 0) * tv(g, 2) - Polynomial::one(ring));
  }
  Word p, q;
  split_word(pres.relators[0], p, q);
  rep::PolyMat2 lhs = eval_word(p, mats, ring);
  rep::PolyMat2 rhs = eval_word(links::inverse(q), mats, ring);
  sys.add(lhs.a - rhs.a);
  sys.add(lhs.b - rhs.b);
  sys.add(lhs.d - rhs.d);  // the c entries are identically zero
  sys.add(Polynomial::variable(ring, 0) -
          eval_word(pres.peripherals[0].meridian, mats, ring).a);
  sys.add(Polynomial::variable(ring, 1) -
          eval_word(pres.peripherals[0].longitude, mats, ring).a);

  presolve(sys.gens, 2);
  std::vector<VarId> matvars;
  for (VarId v = 2; v < static_cast<VarId>(ring->size()); ++v)
    matvars.push_back(v);
  MonomialOrder order = MonomialOrder::blocks(ring, {matvars, {0, 1}});
  GroebnerOptions bopts = opts;
  bopts.stage = "eigenvalue reducible branch";
  return keep_ml(algebra::buchberger(sys, order, bopts), ring, mlring);
}

// Irreducible locus.  Both generators are conjugate meridians, so they
// share the eigenvalue pair (s, 1/s); scaling by s keeps everything
// polynomial:
//   rho^(g_core) = [[s^2, s], [0, 1]],   rho^(other) = [[s^2, 0], [u, 1]].
// Any irreducible pair conjugates into this shape: the core matrix is
// non-central (else reducible) hence cyclic, and the other generator must
// have an eigenline off (1, 0) (a shared line would again mean reducible),
// which the unipotent stabilizer moves to (0, 1).  Stray reducible points
// of this branch still satisfy every equation at genuine eigenvectors, so
// they contribute honest eigenvalue pairs and the union stays exact.
Ideal riley_branch(const links::GroupPresentation& pres,
                   const MeridianShape& mu, const RingPtr& mlring,
                   const GroebnerOptions& opts) {
  std::vector<std::string> vars = mlring->names();
  vars.push_back("s");
  vars.push_back("u");
  RingPtr ring = algebra::make_ring(std::move(vars));
  MonomialOrder grevlex = MonomialOrder::grevlex(ring);
  Polynomial m = Polynomial::variable(ring, 0);
  Polynomial l = Polynomial::variable(ring, 1);
  Polynomial s = Polynomial::variable(ring, 2);
  Polynomial u = Polynomial::variable(ring, 3);
  rep::PolyMat2 mats[2];
  mats[mu.core] = {s * s, s, Polynomial::zero(ring), Polynomial::one(ring)};
  mats[1 - mu.core] = {s * s, Polynomial::zero(ring), u,
                       Polynomial::one(ring)};
  Ideal sys(ring);
  Word p, q;
  split_word(pres.relators[0], p, q);
  rep::PolyMat2 lhs = eval_word(p, mats, ring);
  rep::PolyMat2 rhs = eval_word(links::inverse(q), mats, ring);
  for (const Polynomial& d :
       {lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c, lhs.d - rhs.d})
    if (!d.is_zero()) sys.add(stripped(d, grevlex));
  // m is mu's eigenvalue at the conjugated (1, 0) eigenvector.
  sys.add(mu.exp > 0 ? m - s : m * s - Polynomial::one(ring));
  // The longitude conjugated alongside mu commutes with rho(g_core), so its
  // matrix is upper triangular on the whole branch; l sits in its (0, 0)
  // entry, scaled by s^length.
  Word lamp = links::free_reduce(links::concat(
      links::concat(mu.conj, pres.peripherals[0].longitude),
      links::inverse(mu.conj)));
  rep::PolyMat2 nl = eval_word(lamp, mats, ring);
  Polynomial spow = Polynomial::variable(
      ring, 2, static_cast<std::uint32_t>(letter_count(lamp)));
  sys.add(l * spow - nl.a);
  sys.add(l * l * spow - (nl.a + nl.d) * l + spow);  // char-poly seed

  presolve(sys.gens, 2);
  MonomialOrder order = MonomialOrder::blocks(ring, {{2, 3}, {0, 1}});
  GroebnerOptions bopts = opts;
  bopts.stage = "eigenvalue irreducible branch";
  return keep_ml(algebra::buchberger(sys, order, bopts), ring, mlring);
}

}  // namespace

EigenvalueIdeal eigenvalue_ideal(const links::GroupPresentation& pres,
                                 const GroebnerOptions& opts,
                                 std::size_t workers) {
  std::size_t n = pres.peripherals.size();
  if (n == 0) throw Error("eigenvalue_ideal: presentation has no peripheral system");
  RingPtr mlring = rep::ml_ring(n);
  std::size_t nmasks = std::size_t{1} << (n - 1);

  EigenvalueIdeal out;
  out.components = n;

  std::optional<MeridianShape> two_gen;
  if (n == 1 && pres.generators.size() == 2 && pres.relators.size() == 1)
    two_gen = peel_meridian(pres.peripherals[0].meridian);

  std::vector<Ideal> charts;
  if (two_gen) {
    out.charts_used = {"K1:reducible", "K1:irreducible"};
    charts.push_back(triangular_branch(pres, mlring, opts));
    charts.push_back(riley_branch(pres, *two_gen, mlring, opts));
  } else {
    for (std::size_t mask = 0; mask < nmasks; ++mask)
      out.charts_used.push_back(chart_label(n, mask));
    charts.resize(nmasks);
    if (workers > 1 && nmasks > 1) {
      std::vector<std::future<Ideal>> jobs;
      for (std::size_t mask = 0; mask < nmasks; ++mask)
        jobs.push_back(std::async(std::launch::async, [&, mask] {
          return chart_ideal(pres, mask, mlring, opts);
        }));
      for (std::size_t mask = 0; mask < nmasks; ++mask)
        charts[mask] = jobs[mask].get();
    } else {
      for (std::size_t mask = 0; mask < nmasks; ++mask)
        charts[mask] = chart_ideal(pres, mask, mlring, opts);
    }
  }

  GroebnerOptions step = opts;
  step.stage = "eigenvalue intersection";
  Ideal acc = std::move(charts[0]);
  for (std::size_t i = 1; i < charts.size(); ++i)
    acc = algebra::ideal_intersection(acc, charts[i], step);

  step.stage = "eigenvalue normalization";
  std::vector<VarId> units;
  for (VarId v = 0; v < 2 * n; ++v) {
    units.push_back(v);
    out.saturations.push_back(mlring->name(v));
  }
  out.ideal = algebra::laurent_normalize(acc, units, step);
  return out;
}

namespace {

// Dense univariate arithmetic over Q for squarefree reduction; c[i] is the
// coefficient of v^i.
using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs to_dense(const Polynomial& p, VarId v) {
  Coeffs c(p.degree_in(v) + 1, Rational(0));
  for (const auto& t : p.terms()) c[t.mono.exponent(v)] += t.coeff;
  trim(c);
  return c;
}

Polynomial from_dense(const RingPtr& ring, VarId v, const Coeffs& c) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      ts.push_back({i == 0 ? Monomial::one()
                           : Monomial::var(v, static_cast<std::uint32_t>(i)),
                    c[i]});
  return Polynomial::from_terms(ring, std::move(ts));
}

Coeffs derivative(const Coeffs& a) {
  Coeffs d;
  for (std::size_t i = 1; i < a.size(); ++i)
    d.push_back(Rational(static_cast<unsigned long>(i)) * a[i]);
  trim(d);
  return d;
}

Coeffs remainder(Coeffs a, const Coeffs& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

Coeffs div_exact(const Coeffs& a, const Coeffs& b) {
  Coeffs q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Coeffs r = a;
  trim(r);
  while (r.size() >= b.size() && !r.empty()) {
    Rational f = r.back() / b.back();
    q[r.size() - b.size()] = f;
    std::size_t off = r.size() - b.size();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) r[off + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  return q;
}

Polynomial squarefree_univariate(const Polynomial& p, VarId v) {
  Coeffs c = to_dense(p, v);
  if (c.size() <= 2) return p;  // degree <= 1
  Coeffs g = poly_gcd(c, derivative(c));
  if (g.size() <= 1) return p;  // already squarefree
  return from_dense(p.ring(), v, div_exact(c, g));
}

}  // namespace

Ideal a_ideal(const EigenvalueIdeal& E) {
  MonomialOrder order = MonomialOrder::grevlex(E.ideal.ring);
  Ideal out(E.ideal.ring);
  for (const auto& p : E.ideal.gens) {
    if (p.is_zero()) continue;
    std::vector<VarId> sup = p.support();
    Polynomial q = sup.size() == 1 ? squarefree_univariate(p, sup[0]) : p;
    out.add(q.normalized(order));
  }
  return out.canonical_sorted(order);
}

Ideal invert_components(const Ideal& ideal, const std::vector<bool>& which) {
  std::size_t ncomp = ideal.ring->size() / 2;
  if (which.size() != ncomp)
    throw Error("invert_components: expected one flag per component");
  std::vector<VarId> flip;
  for (std::size_t K = 0; K < ncomp; ++K)
    if (which[K]) {
      flip.push_back(rep::m_var(K));
      flip.push_back(rep::l_var(K));
    }
  Ideal out(ideal.ring);
  for (const auto& p : ideal.gens) {
    if (p.is_zero()) continue;
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<Monomial::Entry> ent;
      for (VarId v = 0; v < static_cast<VarId>(ideal.ring->size()); ++v) {
        std::uint32_t e = t.mono.exponent(v);
        for (VarId f : flip)
          if (f == v) e = p.degree_in(v) - e;
        if (e) ent.push_back({v, e});
      }
      ts.push_back({Monomial::from_entries(std::move(ent)), t.coeff});
    }
    out.add(Polynomial::from_terms(ideal.ring, std::move(ts)));
  }
  return out;
}

Ideal invert_components(const Ideal& ideal) {
  return invert_components(ideal,
                           std::vector<bool>(ideal.ring->size() / 2, true));
}

bool tillmann_bound_check(const EigenvalueIdeal& E,
                          const GroebnerOptions& opts) {
  return algebra::ideal_dimension(E.ideal, opts) <=
         static_cast<int>(E.components);
}

Polynomial character_surgery_constraint(const links::GroupPresentation& pres,
                                        std::size_t K, int q) {
  if (K >= pres.peripherals.size())
    throw Error("character_surgery_constraint: no component " +
                std::to_string(K));
  rep::MatrixAssignment asg = rep::matrix_assignment(pres.generators);
  Word w = pres.peripherals[K].meridian;
  Word lam = q >= 0 ? pres.peripherals[K].longitude
                    : links::inverse(pres.peripherals[K].longitude);
  for (int i = 0; i < (q >= 0 ? q : -q); ++i) w = links::concat(w, lam);
  return rep::trace_polynomial(w, asg) -
         Polynomial::constant(asg.ring, Rational(2));
}

}  // namespace evarlab::evar
