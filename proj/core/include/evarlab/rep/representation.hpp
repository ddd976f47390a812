#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evarlab/algebra/ideal.hpp"
#include "evarlab/algebra/polynomial.hpp"
#include "evarlab/links/presentation.hpp"
#include "evarlab/links/word.hpp"

namespace evarlab::rep {

// Symbolic 2x2 matrix over a polynomial ring.
struct PolyMat2 {
  algebra::Polynomial a, b, c, d;  // [[a, b], [c, d]]

  static PolyMat2 identity(const algebra::RingPtr& ring);
  PolyMat2 operator*(const PolyMat2& rhs) const;
  PolyMat2 adjugate() const;  // the inverse whenever det = 1
  algebra::Polynomial trace() const;
  algebra::Polynomial det() const;
};

// One generic SL2 matrix per group generator g, with fresh ring variables
// a_g, b_g, c_g, d_g (in that order, generator-major).
struct MatrixAssignment {
  algebra::RingPtr ring;
  std::vector<std::string> generators;

  PolyMat2 matrix(std::size_t gen) const;
  algebra::Polynomial det_relation(std::size_t gen) const;  // ad - bc - 1
};

MatrixAssignment matrix_assignment(const std::vector<std::string>& generators);

// Product over the word's letters; negative exponents use the adjugate,
// which equals the inverse in the det = 1 quotient.  Empty word -> identity.
PolyMat2 word_matrix(const links::Word& w, const MatrixAssignment& asg);

// Defining ideal of Hom(pi, SL2): determinant relations plus the four entry
// equations of (relator matrix - identity) for every relator.
struct RepresentationIdeal {
  algebra::Ideal ideal;
  MatrixAssignment assignment;
};

RepresentationIdeal representation_ideal(const links::GroupPresentation& pres);

algebra::Polynomial trace_polynomial(const links::Word& w,
                                     const MatrixAssignment& asg);

}  // namespace evarlab::rep
