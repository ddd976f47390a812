#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evarlab/links/pdcode.hpp"
#include "evarlab/links/word.hpp"

namespace evarlab::links {

struct PeripheralPair {
  Word meridian;
  Word longitude;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // One meridian/longitude pair per link component, in Components order.
  std::vector<PeripheralPair> peripherals;
};

// Wirtinger presentation with the standard peripheral system under the
// Seifert framing: one generator per arc (named x<smallest edge>; free loops
// get u<k>), one conjugation relator per crossing, meridian = arc of the
// component's smallest edge, longitude = over-strand letters (sign powers)
// collected along the component and corrected by meridian^(-self writhe).
GroupPresentation wirtinger(const PDCode& pd);

struct SimplifyStats {
  std::size_t relators_dropped = 0;
  std::size_t generators_eliminated = 0;
};

// Shrinks a Wirtinger presentation without changing the group or the
// peripheral conjugacy data: drops the one redundant relator of each
// connected diagram piece, then repeatedly eliminates generators that occur
// exactly once (exponent +-1) in some relator, substituting everywhere.
// Relators are cyclically reduced; peripheral words only freely reduced so
// they stay honest words in the group (not just conjugacy classes).
//
// Only valid on presentations produced by wirtinger() (the redundancy drop
// relies on the closed-diagram relation among Wirtinger relators).
SimplifyStats simplify_wirtinger(GroupPresentation& pres);

}  // namespace evarlab::links
