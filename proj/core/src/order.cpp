#include "evarlab/algebra/order.hpp"

#include <algorithm>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

MonomialOrder::MonomialOrder(Kind kind, RingPtr ring,
                             std::vector<std::vector<VarId>> blocks)
    : kind_(kind), ring_(std::move(ring)), blocks_(std::move(blocks)) {
  const std::size_t n = ring_->size();
  block_of_.assign(n, UINT32_MAX);
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    auto& blk = blocks_[b];
    std::sort(blk.begin(), blk.end());
    for (VarId v : blk) {
      if (v >= n || block_of_[v] != UINT32_MAX)
        throw Error("monomial order blocks must partition the ring");
      block_of_[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (block_of_[v] == UINT32_MAX)
      throw Error("monomial order blocks must cover every variable");
}

MonomialOrder MonomialOrder::lex(const RingPtr& ring) {
  std::vector<VarId> prec(ring->size());
  for (VarId v = 0; v < prec.size(); ++v) prec[v] = v;
  return lex(ring, std::move(prec));
}

MonomialOrder MonomialOrder::lex(const RingPtr& ring,
                                 std::vector<VarId> precedence) {
  std::vector<std::vector<VarId>> blocks;
  blocks.reserve(precedence.size());
  for (VarId v : precedence) blocks.push_back({v});
  return MonomialOrder(Kind::Lex, ring, std::move(blocks));
}

MonomialOrder MonomialOrder::grevlex(const RingPtr& ring) {
  std::vector<VarId> all(ring->size());
  for (VarId v = 0; v < all.size(); ++v) all[v] = v;
  return MonomialOrder(Kind::Grevlex, ring, {std::move(all)});
}

MonomialOrder MonomialOrder::blocks(const RingPtr& ring,
                                    std::vector<std::vector<VarId>> blocks) {
  return MonomialOrder(Kind::Blocks, ring, std::move(blocks));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  // Per-block total degrees in one pass over each monomial.
  thread_local std::vector<std::uint64_t> da, db;
  da.assign(blocks_.size(), 0);
  db.assign(blocks_.size(), 0);
  for (const auto& [v, e] : a.entries()) da[block_of_[v]] += e;
  for (const auto& [v, e] : b.entries()) db[block_of_[v]] += e;

  for (std::uint32_t blk = 0; blk < blocks_.size(); ++blk) {
    if (da[blk] != db[blk]) return da[blk] > db[blk] ? 1 : -1;
    if (da[blk] == 0) continue;
    // Equal block degree: grevlex tie-break.  Scan the block's variables in
    // reverse precedence (descending id); at the first differing exponent the
    // monomial with the smaller exponent is larger.
    auto ia = a.entries().rbegin();
    auto ib = b.entries().rbegin();
    while (true) {
      while (ia != a.entries().rend() && block_of_[ia->first] != blk) ++ia;
      while (ib != b.entries().rend() && block_of_[ib->first] != blk) ++ib;
      const bool ea = (ia == a.entries().rend());
      const bool eb = (ib == b.entries().rend());
      if (ea && eb) break;  // block parts identical
      if (ea) {
        // a has no more entries in this block, so at variable ib->first the
        // exponents are 0 vs positive: a's is smaller, a is larger.
        return 1;
      }
      if (eb) return -1;
      if (ia->first != ib->first) {
        // The larger id holds a positive exponent in exactly one monomial.
        return ia->first > ib->first ? -1 : 1;
      }
      if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
      ++ia;
      ++ib;
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  std::string out;
  switch (kind_) {
    case Kind::Lex:
      out = "lex";
      break;
    case Kind::Grevlex:
      out = "grevlex";
      break;
    case Kind::Blocks:
      out = "blocks";
      break;
  }
  out += '(';
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += ring_->name(blocks_[b][i]);
    }
  }
  out += ')';
  return out;
}

}  // namespace evarlab::algebra
