#pragma once

#include <vector>

#include "evarlab/algebra/groebner.hpp"
#include "evarlab/algebra/ideal.hpp"

namespace evarlab::algebra {

// Ideal-level operations.  Every operation that needs a Groebner basis takes
// GroebnerOptions and honors its budgets (throwing TimeoutError past them).
// Results come back as reduced-basis generator lists, so equal inputs produce
// byte-identical outputs.
//
// Several operations (saturation by an ideal, the containment tests) are
// correct at the level of varieties, i.e. up to radical; callers here never
// need more than that.

bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& opts = {});

// Intersection with the subring generated by `keep`; generators of the result
// only involve kept variables.  The ambient ring is unchanged.
Ideal eliminate(const Ideal& ideal, const std::vector<VarId>& keep,
                const GroebnerOptions& opts = {});

// I : f^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& f,
               const GroebnerOptions& opts = {});

// I : J^infinity, computed as the intersection of the per-generator
// saturations (equal to the true saturation up to radical).
Ideal saturate(const Ideal& ideal, const Ideal& by,
               const GroebnerOptions& opts = {});

// f in radical(I)?
bool radical_membership(const Polynomial& f, const Ideal& ideal,
                        const GroebnerOptions& opts = {});

Ideal ideal_intersection(const Ideal& a, const Ideal& b,
                         const GroebnerOptions& opts = {});

// Krull dimension of V(I): -1 for the unit ideal, the ring dimension for the
// zero ideal.  Computed from leading terms of a grevlex basis via a minimal
// hitting set over their supports.
int ideal_dimension(const Ideal& ideal, const GroebnerOptions& opts = {});

// Saturation by the product of the unit variables: the polynomial contraction
// of the Laurent ideal generated by I when `units` are invertible.
Ideal laurent_normalize(const Ideal& ideal, const std::vector<VarId>& units,
                        const GroebnerOptions& opts = {});

// Every generator of `inner` lies in radical(outer), i.e. V(outer) is
// contained in V(inner).
bool radical_contains(const Ideal& outer, const Ideal& inner,
                      const GroebnerOptions& opts = {});

// V(a) == V(b).
bool radical_equal(const Ideal& a, const Ideal& b,
                   const GroebnerOptions& opts = {});

// Reinterpret an ideal whose generators only use the first |smaller| variables
// (which must be a name-for-name prefix of the current ring).
Ideal restrict_to(const Ideal& ideal, const RingPtr& smaller);

// A variable name not present in the ring: `base`, else base1, base2, ...
std::string fresh_var_name(const Ring& ring, const std::string& base);

}  // namespace evarlab::algebra
