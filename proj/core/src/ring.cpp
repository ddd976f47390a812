#include "evarlab/algebra/ring.hpp"

#include <set>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw Error("ring variable with empty name");
    if (!seen.insert(v).second)
      throw Error("duplicate ring variable: " + v);
  }
}

std::optional<VarId> Ring::find(std::string_view name) const {
  for (VarId i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<Ring>(std::move(vars));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = ring->names();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b))
    throw RingMismatch(std::string("mismatched ambient rings in ") + where);
}

}  // namespace evarlab::algebra
