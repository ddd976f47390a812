#include "evarlab/algebra/ideal.hpp"

#include <algorithm>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> g)
    : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& p : gens)
    require_same_ring(p.ring(), ring, "Ideal");
}

bool Ideal::is_zero_ideal() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

void Ideal::add(Polynomial p) {
  require_same_ring(p.ring(), ring, "Ideal::add");
  gens.push_back(std::move(p));
}

Ideal Ideal::canonical_sorted(const MonomialOrder& order) const {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    out.push_back(g.normalized(order));
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              if (order.less(a.leading_term(order).mono,
                             b.leading_term(order).mono))
                return true;
              if (order.greater(a.leading_term(order).mono,
                                b.leading_term(order).mono))
                return false;
              return a.to_string(order) < b.to_string(order);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Ideal(ring, std::move(out));
}

}  // namespace evarlab::algebra
