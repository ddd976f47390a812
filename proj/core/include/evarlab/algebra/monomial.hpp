#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "evarlab/algebra/ring.hpp"

namespace evarlab::algebra {

// Sparse monomial: (variable, exponent) pairs sorted by variable id,
// exponents strictly positive.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarId v, std::uint32_t e = 1);
  static Monomial from_entries(std::vector<Entry> entries);  // validates

  bool is_one() const { return entries_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent(VarId v) const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& other) const;
  // other / this, or nullopt when not divisible.
  std::optional<Monomial> divide_into(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  // True when every variable in the support is flagged in `keep`.
  bool supported_on(const std::vector<bool>& keep) const;

  bool operator==(const Monomial& rhs) const { return entries_ == rhs.entries_; }
  bool operator!=(const Monomial& rhs) const { return entries_ != rhs.entries_; }

  // Order-independent total order used for canonical term storage: plain
  // lexicographic on exponent vectors (invariant under multiplication by a
  // common monomial).
  static int structural_compare(const Monomial& a, const Monomial& b);

 private:
  std::vector<Entry> entries_;
};

}  // namespace evarlab::algebra
