#pragma once

#include <vector>

#include "evarlab/algebra/polynomial.hpp"

namespace evarlab::algebra {

// Finitely generated ideal, remembered by an explicit generator list in its
// ambient ring.  Generators are kept as given; canonicalization happens in
// the Groebner layer.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  Ideal() = default;
  explicit Ideal(RingPtr r) : ring(std::move(r)) {}
  Ideal(RingPtr r, std::vector<Polynomial> g);

  bool is_zero_ideal() const;  // no nonzero generators
  void add(Polynomial p);

  // Drops zeros and duplicates, sorts structurally; used before hashing and
  // serialization so equal generator sets serialize identically.
  Ideal canonical_sorted(const MonomialOrder& order) const;
};

}  // namespace evarlab::algebra
