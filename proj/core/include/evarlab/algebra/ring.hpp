#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evarlab::algebra {

using VarId = std::uint32_t;

// Ambient polynomial ring over Q: an ordered list of distinct variable names.
// Rings are immutable and shared; two rings are compatible iff their variable
// lists are identical.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(VarId v) const { return vars_.at(v); }
  const std::vector<std::string>& names() const { return vars_; }
  std::optional<VarId> find(std::string_view name) const;

  bool operator==(const Ring& other) const { return vars_ == other.vars_; }
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

// New ring with `extra` appended; existing VarIds stay valid.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace evarlab::algebra
