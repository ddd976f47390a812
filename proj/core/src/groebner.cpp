#include "evarlab/algebra/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <list>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

namespace {

// Reduction works fraction-free on integer coefficients: a division step is
// work := (lc_g/d) * work - (lc_w/d) * q * g with d = gcd(lc_w, lc_g), all in
// mpz.  The division path (which monomial, which divisor) depends only on
// monomials, so results match the textbook rational algorithm up to the
// tracked scalar.
struct ITerm {
  Monomial mono;
  Integer coeff;
};

// Descending term list under `order`, coefficients scaled to integers.
// The represented value is (returned list) / scale.
std::vector<ITerm> to_iterms(const Polynomial& p, const MonomialOrder& order,
                             Rational& scale) {
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, t.coeff.get_den());
  std::vector<ITerm> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Rational c = t.coeff * den;
    out.push_back({t.mono, c.get_num()});
  }
  std::sort(out.begin(), out.end(), [&](const ITerm& a, const ITerm& b) {
    return order.greater(a.mono, b.mono);
  });
  scale = Rational(den);
  return out;
}

struct BasisEntry {
  Polynomial poly;
  Monomial lm;
  std::vector<ITerm> terms;  // descending; primitive integer, positive lead
  std::uint64_t sugar = 0;
};

BasisEntry make_entry(Polynomial p, const MonomialOrder& order,
                      std::uint64_t sugar) {
  Monomial lm = p.leading_term(order).mono;
  Rational scale;
  std::vector<ITerm> ts = to_iterms(p, order, scale);
  Integer content = 0;
  for (const auto& t : ts) content = gcd(content, t.coeff);
  if (ts[0].coeff < 0) content = -content;
  if (content != 1)
    for (auto& t : ts) t.coeff /= content;
  return BasisEntry{std::move(p), std::move(lm), std::move(ts), sugar};
}

void strip_content(std::vector<ITerm>& w, Rational& scale) {
  Integer content = 0;
  for (const auto& t : w) {
    content = gcd(content, t.coeff);
    if (content == 1) return;
  }
  if (content == 0 || content == 1) return;
  for (auto& t : w) t.coeff /= content;
  scale /= Rational(content);
}

struct Budget {
  const GroebnerOptions* opts;
  std::chrono::steady_clock::time_point start;
  std::size_t pairs = 0;

  void checkpoint() const {
    if (opts->time_budget.count() > 0 &&
        std::chrono::steady_clock::now() - start >= opts->time_budget)
      throw TimeoutError(opts->stage,
                         std::string("wall-clock budget exceeded in ") +
                             opts->stage);
  }
  void count_pair() {
    if (++pairs > opts->pair_budget)
      throw TimeoutError(opts->stage,
                         std::string("pair budget exceeded in ") + opts->stage);
    if ((pairs & 0xffu) == 0) checkpoint();
  }
  void check_degree(std::uint64_t deg) const {
    if (deg > opts->degree_cap)
      throw TimeoutError(opts->stage,
                         std::string("degree cap exceeded in ") + opts->stage);
  }
};

// Full reduction of `work` modulo the entries listed in `active`; the divisor
// search order follows `active`, which keeps runs deterministic.  On return
// the represented remainder is (work) / scale.
void reduce_iterms(std::vector<ITerm>& work, Rational& scale,
                   const std::vector<BasisEntry>& basis,
                   const std::vector<std::size_t>& active,
                   const MonomialOrder& order, const Budget* budget = nullptr) {
  static const bool trace = std::getenv("EVARLAB_GB_TRACE") != nullptr;
  std::vector<ITerm> merged;
  std::size_t pos = 0;  // terms before pos are irreducible
  int scalings = 0;
  std::size_t steps = 0;
  while (pos < work.size()) {
    ++steps;
    if (budget && (steps & 0x3ffu) == 0) budget->checkpoint();
    if (trace && (steps & 0xffu) == 0)
      std::fprintf(stderr, "[red] steps=%zu pos=%zu size=%zu lead_bits=%zu\n",
                   steps, pos, work.size(),
                   mpz_sizeinbase(work.empty() ? Integer(0).get_mpz_t()
                                              : work[0].coeff.get_mpz_t(),
                                  2));
    if (scalings >= 32) {
      strip_content(work, scale);
      scalings = 0;
    }
    const BasisEntry* div = nullptr;
    for (std::size_t idx : active)
      if (basis[idx].lm.divides(work[pos].mono)) {
        div = &basis[idx];
        break;
      }
    if (!div) {
      ++pos;
      continue;
    }
    Monomial q = *div->lm.divide_into(work[pos].mono);
    Integer d = gcd(work[pos].coeff, div->terms[0].coeff);
    Integer a = div->terms[0].coeff / d;  // multiplies all of work
    Integer b = work[pos].coeff / d;      // multiplies the divisor tail
    if (a != 1) {
      for (std::size_t k = 0; k < pos; ++k) work[k].coeff *= a;
      scale *= Rational(a);
      ++scalings;
    }
    // merge work[pos+1..) * a with -b * q * tail(div); the leading term
    // cancels exactly.
    merged.clear();
    std::size_t i = pos + 1, j = 1;
    Monomial gm;
    if (j < div->terms.size()) gm = div->terms[j].mono * q;
    while (i < work.size() || j < div->terms.size()) {
      int cmp;
      if (i < work.size() && j < div->terms.size())
        cmp = order.compare(work[i].mono, gm);
      else
        cmp = i < work.size() ? 1 : -1;
      if (cmp > 0) {
        merged.push_back({std::move(work[i].mono),
                          a == 1 ? std::move(work[i].coeff)
                                 : Integer(work[i].coeff * a)});
        ++i;
      } else if (cmp < 0) {
        merged.push_back({std::move(gm), Integer(-b * div->terms[j].coeff)});
        ++j;
        if (j < div->terms.size()) gm = div->terms[j].mono * q;
      } else {
        Integer c = work[i].coeff * a - b * div->terms[j].coeff;
        if (c != 0) merged.push_back({std::move(work[i].mono), std::move(c)});
        ++i;
        ++j;
        if (j < div->terms.size()) gm = div->terms[j].mono * q;
      }
    }
    work.resize(pos);
    work.insert(work.end(), std::make_move_iterator(merged.begin()),
                std::make_move_iterator(merged.end()));
  }
}

Polynomial from_iterms(const RingPtr& ring, const std::vector<ITerm>& w,
                       const Rational& scale) {
  std::vector<Term> ts;
  ts.reserve(w.size());
  for (const auto& t : w) ts.push_back({t.mono, Rational(t.coeff) / scale});
  return Polynomial::from_terms(ring, std::move(ts));
}

// Remainder with the same value the rational division algorithm produces.
Polynomial reduce_full(const Polynomial& f, const std::vector<BasisEntry>& basis,
                       const std::vector<std::size_t>& active,
                       const MonomialOrder& order,
                       const Budget* budget = nullptr) {
  Rational scale;
  std::vector<ITerm> work = to_iterms(f, order, scale);
  reduce_iterms(work, scale, basis, active, order, budget);
  return from_iterms(f.ring(), work, scale);
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint64_t sugar;
};

// Gebauer-Moeller update: generate the surviving pairs (i, t) for active i,
// and prune the pending list with the chain criterion.  basis[t].sugar must
// already hold the sugar of the new element.
void update_pairs(std::list<Pair>& pairs, const std::vector<BasisEntry>& basis,
                  const std::vector<std::size_t>& active, std::size_t t) {
  const Monomial& lt = basis[t].lm;

  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool keep = true;
  };
  std::vector<Cand> cands;
  cands.reserve(active.size());
  for (std::size_t i : active)
    if (i != t) cands.push_back({i, Monomial::lcm(basis[i].lm, lt)});

  // M criterion: drop (i,t) when another candidate's lcm strictly divides its
  // lcm.  (Transitivity makes skipping already-dropped witnesses safe.)
  for (auto& a : cands) {
    for (const auto& b : cands) {
      if (&a == &b || !b.keep) continue;
      if (b.lcm.divides(a.lcm) && a.lcm != b.lcm) {
        a.keep = false;
        break;
      }
    }
  }
  // F criterion: among equal lcms keep only the first.
  for (std::size_t x = 0; x < cands.size(); ++x) {
    if (!cands[x].keep) continue;
    for (std::size_t y = x + 1; y < cands.size(); ++y)
      if (cands[y].keep && cands[x].lcm == cands[y].lcm) cands[y].keep = false;
  }
  // Product criterion: coprime leading monomials reduce to zero.
  for (auto& a : cands)
    if (a.keep && Monomial::coprime(basis[a.i].lm, lt)) a.keep = false;

  // Chain criterion against the pending list.
  for (auto it = pairs.begin(); it != pairs.end();) {
    if (lt.divides(it->lcm) &&
        Monomial::lcm(basis[it->i].lm, lt) != it->lcm &&
        Monomial::lcm(basis[it->j].lm, lt) != it->lcm)
      it = pairs.erase(it);
    else
      ++it;
  }

  for (auto& a : cands) {
    if (!a.keep) continue;
    std::size_t i = std::min(a.i, t), j = std::max(a.i, t);
    std::uint64_t sugar =
        std::max(basis[i].sugar + (*basis[i].lm.divide_into(a.lcm)).degree(),
                 basis[j].sugar + (*basis[j].lm.divide_into(a.lcm)).degree());
    pairs.push_back({i, j, std::move(a.lcm), sugar});
  }
}

// Lowest sugar first; ties by smaller lcm under the order, then by indices.
std::list<Pair>::iterator select_pair(std::list<Pair>& pairs,
                                      const MonomialOrder& order) {
  auto best = pairs.begin();
  for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
    if (it->sugar != best->sugar) {
      if (it->sugar < best->sugar) best = it;
      continue;
    }
    int cmp = order.compare(it->lcm, best->lcm);
    if (cmp < 0 ||
        (cmp == 0 && (it->j < best->j || (it->j == best->j && it->i < best->i))))
      best = it;
  }
  return best;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  require_same_ring(f.ring(), order.ring(), "normal_form");
  std::vector<BasisEntry> basis;
  std::vector<std::size_t> active;
  for (const auto& g : divisors) {
    if (g.is_zero()) continue;
    require_same_ring(g.ring(), f.ring(), "normal_form");
    active.push_back(basis.size());
    basis.push_back(make_entry(g, order, g.total_degree()));
  }
  return reduce_full(f, basis, active, order);
}

std::string groebner_cache_key(const Ideal& ideal, const MonomialOrder& order) {
  // FNV-1a over a canonical rendering; stable across runs and platforms.
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const auto& name : ideal.ring->names()) feed(name);
  feed(order.to_string());
  Ideal canon = ideal.canonical_sorted(order);
  for (const auto& g : canon.gens) feed(g.to_string(order));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  require_same_ring(ideal.ring, order.ring(), "buchberger");
  GroebnerBasis out;

  std::string key;
  if (opts.cache) {
    key = groebner_cache_key(ideal, order);
    if (auto hit = opts.cache->load(key, ideal.ring)) {
      out.elements = std::move(*hit);
      out.stats.basis_size = out.elements.size();
      out.stats.from_cache = true;
      return out;
    }
  }

  Budget budget{&opts, std::chrono::steady_clock::now()};

  std::vector<BasisEntry> basis;    // append-only; pair indices stay valid
  std::vector<std::size_t> active;  // non-redundant elements, insertion order
  std::list<Pair> pairs;

  auto add_element = [&](Polynomial p, std::uint64_t sugar) {
    p = p.normalized(order);
    budget.check_degree(p.total_degree());
    out.stats.max_degree_seen = std::max<std::uint32_t>(
        out.stats.max_degree_seen, static_cast<std::uint32_t>(p.total_degree()));
    std::uint64_t sug = std::max<std::uint64_t>(sugar, p.total_degree());
    std::size_t t = basis.size();
    basis.push_back(make_entry(std::move(p), order, sug));
    update_pairs(pairs, basis, active, t);
    // The new element makes any old one with divisible leading monomial
    // redundant; pending pairs that mention it remain valid via `basis`.
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](std::size_t i) {
                                  return basis[t].lm.divides(basis[i].lm);
                                }),
                 active.end());
    active.push_back(t);
  };

  // Seed with the interreduced input generators, smallest leading term first.
  std::vector<Polynomial> inputs;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) inputs.push_back(g);
  std::sort(inputs.begin(), inputs.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_term(order).mono,
                                b.leading_term(order).mono);
            });
  for (const auto& g : inputs) {
    Polynomial r = reduce_full(g, basis, active, order, &budget);
    if (!r.is_zero()) {
      std::uint64_t deg = r.total_degree();
      add_element(std::move(r), deg);
    }
  }

  static const bool trace = std::getenv("EVARLAB_GB_TRACE") != nullptr;
  while (!pairs.empty()) {
    budget.count_pair();
    if (trace && (budget.pairs & 0xfffu) == 0)
      std::fprintf(stderr, "[gb %s] pairs=%zu pending=%zu basis=%zu maxdeg=%u\n",
                   opts.stage, budget.pairs, pairs.size(), active.size(),
                   out.stats.max_degree_seen);
    auto it = select_pair(pairs, order);
    Pair pr = *it;
    pairs.erase(it);

    Monomial mi = *basis[pr.i].lm.divide_into(pr.lcm);
    Monomial mj = *basis[pr.j].lm.divide_into(pr.lcm);
    // basis polynomials are monic (add_element normalizes), so no lc division
    Polynomial spoly = basis[pr.i].poly.times_term(mi, Rational(1)) -
                       basis[pr.j].poly.times_term(mj, Rational(1));
    Polynomial r = reduce_full(spoly, basis, active, order, &budget);
    if (!r.is_zero()) add_element(std::move(r), pr.sugar);
  }

  // Minimalize, then tail-reduce each survivor against the others.
  std::vector<std::size_t> minimal;
  for (std::size_t i : active) {
    bool keep = true;
    for (std::size_t j : active)
      if (j != i && basis[j].lm.divides(basis[i].lm) &&
          (basis[i].lm != basis[j].lm || j < i)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(i);
  }

  std::vector<BasisEntry> survivors;
  survivors.reserve(minimal.size());
  for (std::size_t i : minimal) survivors.push_back(basis[i]);

  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < survivors.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < survivors.size(); ++j)
      if (j != k) others.push_back(j);
    Polynomial r =
        reduce_full(survivors[k].poly, survivors, others, order, &budget);
    if (!r.is_zero()) reduced.push_back(r.normalized(order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_term(order).mono,
                                b.leading_term(order).mono);
            });
  out.elements = std::move(reduced);
  out.stats.pairs_processed = budget.pairs;
  out.stats.basis_size = out.elements.size();

  if (opts.cache) opts.cache->store(key, out.elements);
  return out;
}

}  // namespace evarlab::algebra
