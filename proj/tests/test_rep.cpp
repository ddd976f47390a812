#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "evarlab/algebra/ideal_ops.hpp"
#include "evarlab/errors.hpp"
#include "evarlab/links/pdcode.hpp"
#include "evarlab/links/presentation.hpp"
#include "evarlab/rep/abelian.hpp"
#include "evarlab/rep/representation.hpp"

using namespace evarlab;
using namespace evarlab::algebra;
using namespace evarlab::rep;
using links::Word;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return Polynomial::parse(r, s);
}

// identity point: every generator maps to the identity matrix
std::vector<Rational> identity_point(const MatrixAssignment& asg) {
  std::vector<Rational> pt(asg.ring->size(), 0);
  for (std::size_t g = 0; g < asg.generators.size(); ++g) {
    pt[4 * g] = 1;      // a
    pt[4 * g + 3] = 1;  // d
  }
  return pt;
}

}  // namespace

TEST_CASE("matrix assignment variables and determinant relations") {
  auto asg = matrix_assignment({"a", "b"});
  CHECK(asg.ring->names() ==
        std::vector<std::string>{"a_a", "b_a", "c_a", "d_a", "a_b", "b_b",
                                 "c_b", "d_b"});
  CHECK(asg.det_relation(0) == P(asg.ring, "a_a*d_a - b_a*c_a - 1"));
  CHECK_THROWS_AS(asg.matrix(2), Error);
}

TEST_CASE("word_matrix basics") {
  auto asg = matrix_assignment({"g"});
  auto id = word_matrix(Word{}, asg);
  CHECK(id.a == Polynomial::one(asg.ring));
  CHECK(id.b.is_zero());
  CHECK(id.c.is_zero());
  CHECK(id.d == Polynomial::one(asg.ring));

  // g * g^-1 equals det(g) * identity, which is the identity modulo ad-bc-1
  auto m = word_matrix(Word{{0, 1}, {0, -1}}, asg);
  CHECK(m.a - Polynomial::one(asg.ring) == asg.det_relation(0));
  CHECK(m.b.is_zero());
  CHECK(m.c.is_zero());
  CHECK(m.d - Polynomial::one(asg.ring) == asg.det_relation(0));

  auto sq = word_matrix(Word{{0, 2}}, asg);
  CHECK(sq.a == P(asg.ring, "a_g^2 + b_g*c_g"));
  CHECK(sq.b == P(asg.ring, "a_g*b_g + b_g*d_g"));
  CHECK(sq.c == P(asg.ring, "c_g*a_g + d_g*c_g"));
  CHECK(sq.d == P(asg.ring, "c_g*b_g + d_g^2"));

  CHECK_THROWS_AS(word_matrix(Word{{3, 1}}, asg), Error);
}

TEST_CASE("representation ideal of the free group has only det relations") {
  links::GroupPresentation free_one;
  free_one.generators = {"a"};
  auto rep = representation_ideal(free_one);
  REQUIRE(rep.ideal.gens.size() == 1);
  CHECK(rep.ideal.gens[0] == P(rep.assignment.ring, "a_a*d_a - b_a*c_a - 1"));
  CHECK(ideal_dimension(rep.ideal) == 3);  // SL2 is a 3-fold
}

TEST_CASE("commuting-pair variety has commutator trace 2") {
  links::GroupPresentation z2;
  z2.generators = {"a", "b"};
  z2.relators = {Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}}};
  auto rep = representation_ideal(z2);
  CHECK(rep.ideal.gens.size() == 2 + 4);
  Word comm{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  auto tr = trace_polynomial(comm, rep.assignment);
  CHECK(radical_membership(tr - Polynomial::constant(rep.assignment.ring, 2),
                           rep.ideal));
}

TEST_CASE("involution relator forces squared matrix to identity") {
  links::GroupPresentation pres;
  pres.generators = {"a"};
  pres.relators = {Word{{0, 2}}};
  auto rep = representation_ideal(pres);
  REQUIRE(rep.ideal.gens.size() == 5);
  const auto& r = rep.assignment.ring;
  CHECK(rep.ideal.gens[1] == P(r, "a_a^2 + b_a*c_a - 1"));
  CHECK(rep.ideal.gens[2] == P(r, "a_a*b_a + b_a*d_a"));
  CHECK(rep.ideal.gens[3] == P(r, "c_a*a_a + d_a*c_a"));
  CHECK(rep.ideal.gens[4] == P(r, "c_a*b_a + d_a^2 - 1"));
}

TEST_CASE("trace polynomial identities") {
  auto asg = matrix_assignment({"u", "v"});
  CHECK(trace_polynomial(Word{}, asg) ==
        Polynomial::constant(asg.ring, 2));
  CHECK(trace_polynomial(Word{{0, 1}}, asg) == P(asg.ring, "a_u + d_u"));

  // tr(uv) + tr(u v^-1) = tr(u) tr(v) holds identically for 2x2 adjugates
  auto lhs = trace_polynomial(Word{{0, 1}, {1, 1}}, asg) +
             trace_polynomial(Word{{0, 1}, {1, -1}}, asg);
  auto rhs = trace_polynomial(Word{{0, 1}}, asg) *
             trace_polynomial(Word{{1, 1}}, asg);
  CHECK(lhs == rhs);

  // cyclic permutation and inversion leave traces syntactically equal
  Word w{{0, 1}, {1, 2}, {0, -1}, {1, 1}};
  Word rot{{1, 2}, {0, -1}, {1, 1}, {0, 1}};
  CHECK(trace_polynomial(w, asg) == trace_polynomial(rot, asg));
  CHECK(trace_polynomial(w, asg) == trace_polynomial(links::inverse(w), asg));
}

TEST_CASE("every representation ideal vanishes at the identity point") {
  for (const char* code :
       {"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", "PD[X[1,3,2,4],X[3,1,4,2]]",
        "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]"}) {
    auto pres = links::wirtinger(links::parse_pd(code));
    auto rep = representation_ideal(pres);
    auto pt = identity_point(rep.assignment);
    for (const auto& g : rep.ideal.gens) CHECK(g.evaluate(pt) == Rational(0));
  }
}

TEST_CASE("canonical sign vectors pin the first component") {
  CHECK(canonical_sign_vectors(1) == std::vector<SignVector>{{1}});
  CHECK(canonical_sign_vectors(2) ==
        std::vector<SignVector>{{1, 1}, {1, -1}});
  CHECK(canonical_sign_vectors(3).size() == 4);
  for (const auto& s : canonical_sign_vectors(3)) CHECK(s[0] == 1);
}

TEST_CASE("abelian ideal of a knot is the longitude-1 line") {
  auto ideal = abelian_ideal({{0}}, {1});
  REQUIRE(ideal.gens.size() == 1);
  CHECK(ideal.gens[0] == P(ideal.ring, "l1 - 1"));
}

TEST_CASE("abelian ideals of the positive Hopf link") {
  std::vector<std::vector<int>> lk{{0, 1}, {1, 0}};
  auto ring = ml_ring(2);

  auto pp = abelian_ideal(lk, {1, 1}, ring);
  auto pm = abelian_ideal(lk, {1, -1}, ring);
  CHECK(radical_equal(pp, Ideal(ring, {P(ring, "l1 - m2"), P(ring, "l2 - m1")})));
  CHECK(radical_equal(pm, Ideal(ring, {P(ring, "l1*m2 - 1"), P(ring, "l2*m1 - 1")})));
  CHECK(ideal_dimension(pp) == 2);
  CHECK(ideal_dimension(pm) == 2);

  auto un = abelian_evar_ideal(lk);
  CHECK(ideal_dimension(un) == 2);
  // the union contains both sheets and neither individual sheet relation
  CHECK(radical_membership(P(ring, "l1 - m2") * P(ring, "l1*m2 - 1"), un));
  CHECK_FALSE(radical_membership(P(ring, "l1 - m2"), un));
  CHECK(radical_contains(pp, un));
  CHECK(radical_contains(pm, un));
}

TEST_CASE("abelian ideal rejects non-canonical signs") {
  CHECK_THROWS_AS(abelian_ideal({{0}}, {-1}), Error);
  CHECK_THROWS_AS(abelian_ideal({{0, 1}, {1, 0}}, {1}), Error);
  CHECK_THROWS_AS(abelian_ideal({{0, 1}, {1, 0}}, {1, 2}), Error);
}

TEST_CASE("homologically trivial links have the plain torus union") {
  std::vector<std::vector<int>> lk(3, std::vector<int>(3, 0));
  auto ring = ml_ring(3);
  auto un = abelian_evar_ideal(lk);
  Ideal expected(ring, {P(ring, "l1 - 1"), P(ring, "l2 - 1"), P(ring, "l3 - 1")});
  CHECK(radical_equal(un, expected));
  CHECK(ideal_dimension(un) == 3);
}

TEST_CASE("abelian sheets always have dimension |L|") {
  std::mt19937 rng(20240804);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    std::vector<std::vector<int>> lk(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) lk[i][j] = lk[j][i] = entry(rng);
    for (const auto& sigma : canonical_sign_vectors(n)) {
      auto ideal = abelian_ideal(lk, sigma);
      CAPTURE(trial);
      CHECK(ideal_dimension(ideal) == static_cast<int>(n));
    }
  }
}

TEST_CASE("parametric abelian points satisfy the sign-resolved relations") {
  // With diagonal representations rho(mu_J) = diag(t_J, 1/t_J) and lift
  // choices sigma, the realized eigenvalues are m_J = t_J^(sigma_J) and
  // l_K = prod_J t_J^(sigma_K lk(K,J)).  Each generator must then become the
  // zero Laurent identity; in exponent arithmetic: the cleared left and right
  // monomials get equal t-exponents.
  std::mt19937 rng(20240805);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<std::vector<int>> lk(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) lk[i][j] = lk[j][i] = entry(rng);
    for (const auto& sigma : canonical_sign_vectors(n)) {
      auto ideal = abelian_ideal(lk, sigma);
      REQUIRE(!ideal.gens.empty());
      for (const auto& gen : ideal.gens) {
        // lattice ideal: every reduced-basis element is a pure difference
        REQUIRE(gen.term_count() == 2);
        CHECK(gen.terms()[0].coeff == -gen.terms()[1].coeff);
        // substitute and compare exponent vectors over t_1..t_n
        std::vector<long> lhs_t(n, 0), rhs_t(n, 0);
        auto accumulate = [&](const Monomial& mono, std::vector<long>& acc) {
          for (const auto& [var, exp] : mono.entries()) {
            std::size_t comp = var / 2;
            if (var % 2 == 0) {  // m_comp -> t_comp^sigma
              acc[comp] += static_cast<long>(exp) * sigma[comp];
            } else {  // l_comp -> prod t_J^(sigma_comp lk)
              for (std::size_t J = 0; J < n; ++J)
                acc[J] +=
                    static_cast<long>(exp) * sigma[comp] * lk[comp][J];
            }
          }
        };
        accumulate(gen.terms()[0].mono, lhs_t);
        accumulate(gen.terms()[1].mono, rhs_t);
        CHECK(lhs_t == rhs_t);
      }
    }
  }
}
