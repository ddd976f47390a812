#include "evarlab/dehn/fill.hpp"

#include <algorithm>
#include <string>

#include "evarlab/errors.hpp"

namespace evarlab::dehn {

using links::Word;

namespace {

Word power(const Word& w, long e) {
  if (e == 0) return {};
  Word base = e > 0 ? w : links::inverse(w);
  if (e < 0) e = -e;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(e));
  for (long k = 0; k < e; ++k) out.insert(out.end(), base.begin(), base.end());
  return links::free_reduce(std::move(out));
}

void check_component(std::size_t K, std::size_t n, const char* where) {
  if (K >= n)
    throw Error(std::string(where) + ": component index " + std::to_string(K) +
                " out of range (have " + std::to_string(n) + ")");
}

}  // namespace

PeripheralSystem fill_longitude_update(const PeripheralSystem& ps,
                                       const LinkingMatrix& lk, std::size_t K,
                                       int q) {
  check_component(K, lk.size(), "fill_longitude_update");
  if (ps.size() != lk.size())
    throw Error("fill_longitude_update: peripheral/linking size mismatch");
  PeripheralSystem out = ps;
  for (std::size_t J = 0; J < out.size(); ++J) {
    if (J == K) continue;
    long a = lk[K][J];
    long e = static_cast<long>(q) * a * a;
    if (e == 0) continue;
    out[J].longitude = links::free_reduce(
        links::concat(out[J].longitude, power(out[J].meridian, e)));
  }
  return out;
}

LinkingMatrix fill_linking_update(const LinkingMatrix& lk, std::size_t K,
                                  int q) {
  check_component(K, lk.size(), "fill_linking_update");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < lk.size(); ++i)
    if (i != K) keep.push_back(i);
  LinkingMatrix out(keep.size(), std::vector<int>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a == b) continue;
      std::size_t J = keep[a], Jp = keep[b];
      out[a][b] = lk[J][Jp] - q * lk[K][J] * lk[K][Jp];
    }
  return out;
}

FilledPresentation filled_presentation(const links::GroupPresentation& pres,
                                       const PeripheralSystem& ps,
                                       const LinkingMatrix& lk, std::size_t K,
                                       int q) {
  check_component(K, ps.size(), "filled_presentation");
  if (ps.size() != lk.size())
    throw Error("filled_presentation: peripheral/linking size mismatch");

  FilledPresentation out;
  out.presentation.generators = pres.generators;
  out.presentation.relators = pres.relators;
  // Slope relator mu_K * lambda_K^q in the CURRENT peripheral system.
  out.presentation.relators.push_back(links::free_reduce(
      links::concat(ps[K].meridian, power(ps[K].longitude, q))));

  PeripheralSystem updated = fill_longitude_update(ps, lk, K, q);
  updated.erase(updated.begin() + static_cast<std::ptrdiff_t>(K));
  out.presentation.peripherals = std::move(updated);

  out.lk = fill_linking_update(lk, K, q);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (i != K) out.remaining.push_back(i);
  return out;
}

FilledPresentation iterated_fill(const links::GroupPresentation& pres,
                                 const PeripheralSystem& ps,
                                 const LinkingMatrix& lk,
                                 const FillingPlan& plan) {
  for (std::size_t a = 0; a < plan.size(); ++a)
    for (std::size_t b = a + 1; b < plan.size(); ++b)
      if (plan[a].component == plan[b].component)
        throw Error("iterated_fill: component " +
                    std::to_string(plan[a].component) +
                    " appears twice in the plan");

  FilledPresentation cur;
  cur.presentation = pres;
  cur.presentation.peripherals = ps;
  cur.lk = lk;
  for (std::size_t i = 0; i < ps.size(); ++i) cur.remaining.push_back(i);

  for (const auto& step : plan) {
    auto slot = std::find(cur.remaining.begin(), cur.remaining.end(),
                          step.component);
    if (slot == cur.remaining.end())
      throw Error("iterated_fill: component " +
                  std::to_string(step.component) + " not fillable");
    std::size_t K = static_cast<std::size_t>(slot - cur.remaining.begin());
    std::vector<std::size_t> names = cur.remaining;
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(K));
    cur = filled_presentation(cur.presentation, cur.presentation.peripherals,
                              cur.lk, K, step.q);
    cur.remaining = std::move(names);
  }
  return cur;
}

Homology first_homology(const links::GroupPresentation& pres) {
  std::size_t n = pres.generators.size();
  std::vector<std::vector<algebra::Integer>> m;
  m.reserve(pres.relators.size());
  for (const auto& r : pres.relators) {
    auto sums = links::exponent_sums(r, n);
    std::vector<algebra::Integer> row;
    row.reserve(n);
    for (auto s : sums) row.emplace_back(static_cast<long>(s));
    m.push_back(std::move(row));
  }
  auto snf = algebra::smith_normal_form(std::move(m));
  Homology h;
  h.free_rank = n - snf.rank;
  for (const auto& d : snf.divisors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

}  // namespace evarlab::dehn
