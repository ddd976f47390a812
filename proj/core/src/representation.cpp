#include "evarlab/rep/representation.hpp"

#include <utility>

#include "evarlab/errors.hpp"

namespace evarlab::rep {

using algebra::Polynomial;
using algebra::RingPtr;
using algebra::VarId;

PolyMat2 PolyMat2::identity(const RingPtr& ring) {
  return {Polynomial::one(ring), Polynomial::zero(ring),
          Polynomial::zero(ring), Polynomial::one(ring)};
}

PolyMat2 PolyMat2::operator*(const PolyMat2& r) const {
  return {a * r.a + b * r.c, a * r.b + b * r.d,  //
          c * r.a + d * r.c, c * r.b + d * r.d};
}

PolyMat2 PolyMat2::adjugate() const { return {d, -b, -c, a}; }

Polynomial PolyMat2::trace() const { return a + d; }

Polynomial PolyMat2::det() const { return a * d - b * c; }

PolyMat2 MatrixAssignment::matrix(std::size_t gen) const {
  if (gen >= generators.size())
    throw Error("matrix assignment: unknown generator index " +
                std::to_string(gen));
  // Entries are located by name, so an assignment can live inside a larger
  // ring (e.g. one that also carries eigenvalue variables up front).
  PolyMat2 out;
  Polynomial* slot[4] = {&out.a, &out.b, &out.c, &out.d};
  const char* prefix[4] = {"a_", "b_", "c_", "d_"};
  for (int k = 0; k < 4; ++k) {
    auto v = ring->find(prefix[k] + generators[gen]);
    if (!v)
      throw Error("matrix assignment: ring lacks variable " + std::string(prefix[k]) +
                  generators[gen]);
    *slot[k] = Polynomial::variable(ring, *v);
  }
  return out;
}

Polynomial MatrixAssignment::det_relation(std::size_t gen) const {
  return matrix(gen).det() - Polynomial::one(ring);
}

MatrixAssignment matrix_assignment(const std::vector<std::string>& generators) {
  std::vector<std::string> vars;
  vars.reserve(4 * generators.size());
  for (const auto& g : generators)
    for (const char* p : {"a_", "b_", "c_", "d_"}) vars.push_back(p + g);
  return {algebra::make_ring(std::move(vars)), generators};
}

PolyMat2 word_matrix(const links::Word& w, const MatrixAssignment& asg) {
  PolyMat2 out = PolyMat2::identity(asg.ring);
  for (const auto& [g, e] : w) {
    if (g < 0 || static_cast<std::size_t>(g) >= asg.generators.size())
      throw Error("word_matrix: unknown generator index " + std::to_string(g));
    PolyMat2 base = asg.matrix(static_cast<std::size_t>(g));
    if (e < 0) base = base.adjugate();
    for (int k = 0; k < (e < 0 ? -e : e); ++k) out = out * base;
  }
  return out;
}

RepresentationIdeal representation_ideal(const links::GroupPresentation& pres) {
  MatrixAssignment asg = matrix_assignment(pres.generators);
  algebra::Ideal ideal(asg.ring);
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    ideal.add(asg.det_relation(g));
  for (const auto& r : pres.relators) {
    PolyMat2 m = word_matrix(r, asg);
    ideal.add(m.a - Polynomial::one(asg.ring));
    ideal.add(m.b);
    ideal.add(m.c);
    ideal.add(m.d - Polynomial::one(asg.ring));
  }
  return {std::move(ideal), std::move(asg)};
}

Polynomial trace_polynomial(const links::Word& w, const MatrixAssignment& asg) {
  return word_matrix(w, asg).trace();
}

}  // namespace evarlab::rep
