#pragma once

#include <cstddef>
#include <vector>

#include "evarlab/algebra/integers.hpp"
#include "evarlab/links/presentation.hpp"

namespace evarlab::dehn {

using PeripheralSystem = std::vector<links::PeripheralPair>;
using LinkingMatrix = std::vector<std::vector<int>>;

// One 1/q filling on a component, identified by its index in the ORIGINAL
// link (0-based; component "K1" is 0).  Order matters: each slope is taken
// in the peripheral system current after the earlier steps.
struct FillingStep {
  std::size_t component = 0;
  int q = 0;
};
using FillingPlan = std::vector<FillingStep>;

struct FilledPresentation {
  // Gains one slope relator per executed filling; peripherals hold the
  // remaining (unfilled) components only, in their original relative order.
  links::GroupPresentation presentation;
  // Original component index for each remaining peripheral slot.
  std::vector<std::size_t> remaining;
  // Updated linking numbers on the remaining components.
  LinkingMatrix lk;
};

// 1/q filling on component K changes the Seifert-framed longitude of every
// other component J to lambda_J * mu_J^(q * lk(K,J)^2); meridians are
// untouched, as is the K entry itself (the caller drops it).
PeripheralSystem fill_longitude_update(const PeripheralSystem& ps,
                                       const LinkingMatrix& lk, std::size_t K,
                                       int q);

// New linking numbers after filling K: lk(J,J') - q * lk(K,J) * lk(K,J'),
// returned on the index set with K removed.  Symmetric, zero diagonal.
LinkingMatrix fill_linking_update(const LinkingMatrix& lk, std::size_t K,
                                  int q);

// Executes one 1/q filling: adds the slope relator mu_K * lambda_K^q, updates
// the longitudes and linking numbers of the other components, and removes K
// from the peripheral bookkeeping.  Wirtinger generators of K stay in the
// presentation; the relator does the quotienting.  K indexes into ps/lk.
FilledPresentation filled_presentation(const links::GroupPresentation& pres,
                                       const PeripheralSystem& ps,
                                       const LinkingMatrix& lk, std::size_t K,
                                       int q);

// Folds filled_presentation over the plan in order.  Plan components use
// original link indices; repeating one is an error.
FilledPresentation iterated_fill(const links::GroupPresentation& pres,
                                 const PeripheralSystem& ps,
                                 const LinkingMatrix& lk,
                                 const FillingPlan& plan);

struct Homology {
  std::size_t free_rank = 0;
  std::vector<algebra::Integer> torsion;  // elementary divisors > 1, in chain
};

// H_1 of the presented group: Smith normal form of the abelianized relator
// matrix (rows = relators, columns = generators).
Homology first_homology(const links::GroupPresentation& pres);

}  // namespace evarlab::dehn
