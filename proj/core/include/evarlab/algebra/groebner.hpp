#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evarlab/algebra/ideal.hpp"
#include "evarlab/algebra/order.hpp"
#include "evarlab/algebra/polynomial.hpp"

namespace evarlab::algebra {

// Optional pluggable store for computed bases (content-addressed; the CLI
// provides a file-backed implementation).
class GbCache {
 public:
  virtual ~GbCache() = default;
  virtual std::optional<std::vector<Polynomial>> load(const std::string& key,
                                                      const RingPtr& ring) = 0;
  virtual void store(const std::string& key,
                     const std::vector<Polynomial>& basis) = 0;
};

struct GroebnerOptions {
  // Hard resource caps; exceeding any of them raises TimeoutError.
  std::size_t pair_budget = 2'000'000;
  std::uint32_t degree_cap = 200;
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
  GbCache* cache = nullptr;
  const char* stage = "groebner";
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t basis_size = 0;
  std::uint32_t max_degree_seen = 0;
  bool from_cache = false;
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // reduced; ascending leading monomials
  GroebnerStats stats;
};

// Remainder of f on division by `divisors` under `order` (fully reduced; no
// remainder term is divisible by any divisor's leading monomial).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

// Buchberger's algorithm with the sugar selection strategy and
// Gebauer-Moeller pair pruning.  Returns the reduced basis, each element an
// integer-primitive polynomial with positive leading coefficient.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

// Content hash of (ring, order, generators); the cache key buchberger uses.
std::string groebner_cache_key(const Ideal& ideal, const MonomialOrder& order);

}  // namespace evarlab::algebra
