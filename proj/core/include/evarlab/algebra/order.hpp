#pragma once

#include <string>
#include <vector>

#include "evarlab/algebra/monomial.hpp"
#include "evarlab/algebra/ring.hpp"

namespace evarlab::algebra {

// Monomial orders: lex, grevlex, and block-elimination orders.  All three are
// realized internally as an ordered list of variable blocks compared
// block-by-block with graded reverse lexicographic comparison inside each
// block (lex = singleton blocks).  A block order with the eliminated
// variables in leading blocks is an elimination order for them.
//
// Within a block, variable precedence is descending by ascending VarId
// (var 0 > var 1 > ...).
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Blocks };

  static MonomialOrder lex(const RingPtr& ring);
  static MonomialOrder lex(const RingPtr& ring, std::vector<VarId> precedence);
  static MonomialOrder grevlex(const RingPtr& ring);
  // Blocks listed from most to least significant; must partition the ring.
  static MonomialOrder blocks(const RingPtr& ring,
                              std::vector<std::vector<VarId>> blocks);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<VarId>>& block_list() const { return blocks_; }

  // +1 when a > b, 0 when equal, -1 when a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  std::string to_string() const;  // stable; used in cache keys

 private:
  MonomialOrder(Kind kind, RingPtr ring, std::vector<std::vector<VarId>> blocks);

  Kind kind_;
  RingPtr ring_;
  std::vector<std::vector<VarId>> blocks_;
  std::vector<std::uint32_t> block_of_;  // var -> block index
};

}  // namespace evarlab::algebra
