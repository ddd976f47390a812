#include "evarlab/algebra/ideal_ops.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

namespace {

std::vector<bool> var_mask(const RingPtr& ring, const std::vector<VarId>& vars) {
  std::vector<bool> mask(ring->size(), false);
  for (VarId v : vars) {
    if (v >= ring->size()) throw RingMismatch("variable id out of range");
    mask[v] = true;
  }
  return mask;
}

Ideal from_basis(const RingPtr& ring, std::vector<Polynomial> elems) {
  return Ideal(ring, std::move(elems));
}

// Ring with one fresh variable appended, plus the lifted generators.
struct Extended {
  RingPtr ring;
  VarId t;
  std::vector<Polynomial> gens;
};

Extended extend_with_t(const Ideal& ideal) {
  std::string tname = fresh_var_name(*ideal.ring, "t");
  Extended ext;
  ext.ring = extend_ring(ideal.ring, {tname});
  ext.t = static_cast<VarId>(ideal.ring->size());
  ext.gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) ext.gens.push_back(g.lifted(ext.ring));
  return ext;
}

}  // namespace

std::string fresh_var_name(const Ring& ring, const std::string& base) {
  if (!ring.find(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!ring.find(cand)) return cand;
  }
}

bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& opts) {
  for (const auto& g : ideal.gens)
    if (!g.is_zero() && g.is_constant()) return true;
  if (ideal.is_zero_ideal()) return false;
  auto gb = buchberger(ideal, MonomialOrder::grevlex(ideal.ring), opts);
  return gb.elements.size() == 1 && gb.elements.front().is_constant();
}

Ideal eliminate(const Ideal& ideal, const std::vector<VarId>& keep,
                const GroebnerOptions& opts) {
  const RingPtr& ring = ideal.ring;
  std::vector<bool> keep_mask = var_mask(ring, keep);
  std::vector<VarId> drop;
  for (VarId v = 0; v < ring->size(); ++v)
    if (!keep_mask[v]) drop.push_back(v);

  if (drop.empty())
    return from_basis(ring,
                      buchberger(ideal, MonomialOrder::grevlex(ring), opts)
                          .elements);

  MonomialOrder order =
      drop.size() == ring->size()
          ? MonomialOrder::grevlex(ring)
          : MonomialOrder::blocks(ring, {drop, [&] {
                                           std::vector<VarId> kept;
                                           for (VarId v = 0; v < ring->size();
                                                ++v)
                                             if (keep_mask[v])
                                               kept.push_back(v);
                                           return kept;
                                         }()});
  auto gb = buchberger(ideal, order, opts);
  std::vector<Polynomial> filtered;
  for (auto& g : gb.elements)
    if (g.supported_on(keep_mask)) filtered.push_back(std::move(g));
  return from_basis(ring, std::move(filtered));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f,
               const GroebnerOptions& opts) {
  require_same_ring(ideal.ring, f.ring(), "saturate");
  if (f.is_zero()) return Ideal(ideal.ring, {Polynomial::one(ideal.ring)});
  if (f.is_constant()) {
    Ideal copy = ideal;
    return copy;
  }
  Extended ext = extend_with_t(ideal);
  Polynomial one_minus_tf =
      Polynomial::one(ext.ring) -
      Polynomial::variable(ext.ring, ext.t) * f.lifted(ext.ring);
  ext.gens.push_back(std::move(one_minus_tf));

  std::vector<VarId> keep;
  for (VarId v = 0; v < ideal.ring->size(); ++v) keep.push_back(v);
  Ideal elim = eliminate(Ideal(ext.ring, std::move(ext.gens)), keep, opts);
  return restrict_to(elim, ideal.ring);
}

Ideal saturate(const Ideal& ideal, const Ideal& by,
               const GroebnerOptions& opts) {
  require_same_ring(ideal.ring, by.ring, "saturate");
  std::vector<Polynomial> divisors;
  for (const auto& g : by.gens)
    if (!g.is_zero()) divisors.push_back(g);
  if (divisors.empty())
    return Ideal(ideal.ring, {Polynomial::one(ideal.ring)});

  bool first = true;
  Ideal acc(ideal.ring);
  for (const auto& g : divisors) {
    Ideal part = saturate(ideal, g, opts);
    acc = first ? std::move(part) : ideal_intersection(acc, part, opts);
    first = false;
  }
  return acc;
}

bool radical_membership(const Polynomial& f, const Ideal& ideal,
                        const GroebnerOptions& opts) {
  require_same_ring(ideal.ring, f.ring(), "radical_membership");
  if (f.is_zero()) return true;
  Extended ext = extend_with_t(ideal);
  Polynomial one_minus_tf =
      Polynomial::one(ext.ring) -
      Polynomial::variable(ext.ring, ext.t) * f.lifted(ext.ring);
  ext.gens.push_back(std::move(one_minus_tf));
  return is_unit_ideal(Ideal(ext.ring, std::move(ext.gens)), opts);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b,
                         const GroebnerOptions& opts) {
  require_same_ring(a.ring, b.ring, "ideal_intersection");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal(a.ring);

  Extended ext = extend_with_t(a);  // lifts a's generators
  Polynomial t = Polynomial::variable(ext.ring, ext.t);
  Polynomial one_minus_t = Polynomial::one(ext.ring) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : ext.gens) gens.push_back(t * g);
  for (const auto& g : b.gens)
    if (!g.is_zero()) gens.push_back(one_minus_t * g.lifted(ext.ring));

  std::vector<VarId> keep;
  for (VarId v = 0; v < a.ring->size(); ++v) keep.push_back(v);
  Ideal elim = eliminate(Ideal(ext.ring, std::move(gens)), keep, opts);
  return restrict_to(elim, a.ring);
}

namespace {

// Minimal hitting set over variable supports, branch and bound.  Supports are
// deduplicated and superset-pruned first; branching follows ascending ids so
// results are deterministic.
std::size_t min_hitting_set(std::vector<std::vector<VarId>> supports) {
  std::sort(supports.begin(), supports.end(),
            [](const auto& x, const auto& y) {
              return x.size() < y.size() ||
                     (x.size() == y.size() && x < y);
            });
  supports.erase(std::unique(supports.begin(), supports.end()),
                 supports.end());
  std::vector<std::vector<VarId>> minimal;
  for (const auto& s : supports) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (std::includes(s.begin(), s.end(), m.begin(), m.end())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(s);
  }

  std::size_t best = 0;
  for (const auto& s : minimal) best += !s.empty();  // upper bound: one per set
  std::set<VarId> chosen;

  auto hit = [&](const std::vector<VarId>& s) {
    return std::any_of(s.begin(), s.end(),
                       [&](VarId v) { return chosen.count(v) != 0; });
  };

  std::function<void()> recurse = [&] {
    if (chosen.size() >= best) return;
    const std::vector<VarId>* target = nullptr;
    for (const auto& s : minimal)
      if (!hit(s) && (!target || s.size() < target->size())) target = &s;
    if (!target) {
      best = chosen.size();
      return;
    }
    for (VarId v : *target) {
      chosen.insert(v);
      recurse();
      chosen.erase(v);
    }
  };
  recurse();
  return best;
}

}  // namespace

int ideal_dimension(const Ideal& ideal, const GroebnerOptions& opts) {
  const RingPtr& ring = ideal.ring;
  MonomialOrder order = MonomialOrder::grevlex(ring);
  auto gb = buchberger(ideal, order, opts);
  if (gb.elements.empty()) return static_cast<int>(ring->size());
  if (gb.elements.size() == 1 && gb.elements.front().is_constant()) return -1;

  std::vector<std::vector<VarId>> supports;
  supports.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    const Monomial& lm = g.leading_term(order).mono;
    std::vector<VarId> s;
    for (const auto& [v, e] : lm.entries()) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::size_t h = min_hitting_set(std::move(supports));
  return static_cast<int>(ring->size()) - static_cast<int>(h);
}

Ideal laurent_normalize(const Ideal& ideal, const std::vector<VarId>& units,
                        const GroebnerOptions& opts) {
  if (units.empty())
    return from_basis(ideal.ring,
                      buchberger(ideal, MonomialOrder::grevlex(ideal.ring),
                                 opts)
                          .elements);
  Monomial prod = Monomial::one();
  for (VarId v : units) {
    if (v >= ideal.ring->size())
      throw RingMismatch("unit variable id out of range");
    prod = prod * Monomial::var(v, 1);
  }
  return saturate(ideal, Polynomial::term(ideal.ring, prod, Rational(1)),
                  opts);
}

bool radical_contains(const Ideal& outer, const Ideal& inner,
                      const GroebnerOptions& opts) {
  require_same_ring(outer.ring, inner.ring, "radical_contains");
  for (const auto& g : inner.gens)
    if (!radical_membership(g, outer, opts)) return false;
  return true;
}

bool radical_equal(const Ideal& a, const Ideal& b,
                   const GroebnerOptions& opts) {
  return radical_contains(a, b, opts) && radical_contains(b, a, opts);
}

Ideal restrict_to(const Ideal& ideal, const RingPtr& smaller) {
  const auto& big = ideal.ring->names();
  const auto& small = smaller->names();
  if (small.size() > big.size() ||
      !std::equal(small.begin(), small.end(), big.begin()))
    throw RingMismatch("restrict_to: target ring is not a prefix");
  std::vector<bool> mask(ideal.ring->size(), false);
  for (VarId v = 0; v < smaller->size(); ++v) mask[v] = true;

  std::vector<Polynomial> gens;
  gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    if (!g.supported_on(mask))
      throw RingMismatch("restrict_to: generator uses a dropped variable");
    std::vector<Term> terms(g.terms().begin(), g.terms().end());
    gens.push_back(Polynomial::from_terms(smaller, std::move(terms)));
  }
  return Ideal(smaller, std::move(gens));
}

}  // namespace evarlab::algebra
