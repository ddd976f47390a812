#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "evarlab/algebra/groebner.hpp"
#include "evarlab/algebra/ideal_ops.hpp"
#include "evarlab/algebra/integers.hpp"
#include "evarlab/algebra/resultant.hpp"
#include "evarlab/errors.hpp"

using namespace evarlab;
using namespace evarlab::algebra;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return Polynomial::parse(r, s);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Ideal ideal_of(const RingPtr& r, std::initializer_list<std::string> gens) {
  Ideal ideal(r);
  for (const auto& g : gens) ideal.add(P(r, g));
  return ideal;
}

}  // namespace

TEST_CASE("ring construction and lookup") {
  RingPtr r = make_ring({"x", "y", "z"});
  CHECK(r->size() == 3);
  CHECK(r->name(1) == "y");
  CHECK(r->find("z") == VarId{2});
  CHECK(!r->find("w"));
  CHECK_THROWS_AS(make_ring({"x", "x"}), Error);
  CHECK_THROWS_AS(make_ring({""}), Error);

  RingPtr ext = extend_ring(r, {"t"});
  CHECK(ext->size() == 4);
  CHECK(ext->find("t") == VarId{3});
  CHECK(ext->name(0) == "x");
  CHECK(!same_ring(r, ext));
  CHECK_THROWS_AS(require_same_ring(r, ext, "test"), RingMismatch);
}

TEST_CASE("monomial arithmetic") {
  Monomial xy = Monomial::var(0) * Monomial::var(1);
  Monomial x2 = Monomial::var(0, 2);
  CHECK(xy.degree() == 2);
  CHECK((xy * x2).exponent(0) == 3);
  CHECK(Monomial::var(0).divides(x2));
  CHECK(!x2.divides(Monomial::var(0)));
  auto q = Monomial::var(0).divide_into(x2);
  REQUIRE(q);
  CHECK(*q == Monomial::var(0));
  CHECK(Monomial::lcm(xy, x2) == Monomial::var(0, 2) * Monomial::var(1));
  CHECK(Monomial::gcd(xy, x2) == Monomial::var(0));
  CHECK(Monomial::coprime(Monomial::var(0), Monomial::var(1)));
  CHECK(!Monomial::coprime(xy, x2));
  CHECK(Monomial::one().is_one());
  CHECK(Monomial::structural_compare(x2, xy) != 0);
}

TEST_CASE("monomial order comparisons") {
  RingPtr r = make_ring({"x", "y", "z"});
  auto lex = MonomialOrder::lex(r);
  auto grevlex = MonomialOrder::grevlex(r);

  Monomial x = Monomial::var(0), y2 = Monomial::var(1, 2);
  CHECK(lex.greater(x, y2));      // lex ignores degree
  CHECK(grevlex.greater(y2, x));  // grevlex grades first

  Monomial y3 = Monomial::var(1, 3);
  Monomial xz2 = Monomial::var(0) * Monomial::var(2, 2);
  CHECK(grevlex.greater(y3, xz2));

  Monomial x2y = Monomial::var(0, 2) * Monomial::var(1);
  Monomial xy2 = Monomial::var(0) * Monomial::var(1, 2);
  CHECK(grevlex.greater(x2y, xy2));

  // Elimination block order: the leading block dominates regardless of degree.
  auto blk = MonomialOrder::blocks(r, {{2}, {0, 1}});
  CHECK(blk.greater(Monomial::var(2), Monomial::var(0, 5)));
  CHECK(blk.compare(x2y, x2y) == 0);
  CHECK(blk.to_string() != grevlex.to_string());
  CHECK_THROWS_AS(MonomialOrder::blocks(r, {{0, 1}}), Error);  // not a partition
}

TEST_CASE("polynomial parsing and printing") {
  RingPtr r = make_ring({"x", "y"});
  auto lex = MonomialOrder::lex(r);

  CHECK(P(r, "x^2 - 2*x*y + y^2").to_string(lex) == "x^2 - 2*x*y + y^2");
  CHECK(P(r, "-x + 3").to_string(lex) == "-x + 3");
  CHECK(P(r, "3/2*x*y - 2").to_string(lex) == "3/2*x*y - 2");
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "0").to_string() == "0");
  CHECK(P(r, "y + x").to_string(lex) == "x + y");
  CHECK(P(r, "2*x - x").to_string(lex) == "x");
  CHECK(P(r, "x - x").is_zero());

  CHECK_THROWS_AS(P(r, ""), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "w"), ParseError);
  CHECK_THROWS_AS(P(r, "x^"), ParseError);
  CHECK_THROWS_AS(P(r, "x $ y"), ParseError);

  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(to_string(Rational(-5, 2)) == "-5/2");
}

TEST_CASE("polynomial arithmetic") {
  RingPtr r = make_ring({"x", "y"});
  Polynomial x = P(r, "x"), y = P(r, "y");
  CHECK((x + y) * (x + y) == P(r, "x^2 + 2*x*y + y^2"));
  CHECK((x + y).pow(3) == P(r, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK((x - y) * (x + y) == P(r, "x^2 - y^2"));
  CHECK(P(r, "x^2*y").total_degree() == 3);
  CHECK(P(r, "x^2*y + x^5").degree_in(0) == 5);
  CHECK(P(r, "x^2 + y").support() == std::vector<VarId>{0, 1});
  CHECK(P(r, "x^2 - y").evaluate({Rational(3), Rational(2)}) == Rational(7));
  CHECK(Rational(2) * x == P(r, "2*x"));
  CHECK((-x).to_string() == "-x");
}

TEST_CASE("integer-primitive normalization") {
  RingPtr r = make_ring({"x", "y"});
  auto lex = MonomialOrder::lex(r);
  CHECK(P(r, "1/2*x - 1/3*y").normalized(lex) == P(r, "3*x - 2*y"));
  CHECK(P(r, "-x + y").normalized(lex) == P(r, "x - y"));
  CHECK(P(r, "4*x^2 - 6*y").normalized(lex) == P(r, "2*x^2 - 3*y"));
  CHECK(P(r, "-2/3").normalized(lex) == P(r, "1"));
}

TEST_CASE("division leaves the expected remainder") {
  RingPtr r = make_ring({"x", "y"});
  auto lex = MonomialOrder::lex(r);
  std::vector<Polynomial> divisors{P(r, "x - y")};
  Polynomial rem = normal_form(P(r, "x^2 + y"), divisors, lex);
  CHECK(rem == P(r, "y^2 + y"));
  // Fully reduced: dividing again changes nothing.
  CHECK(normal_form(rem, divisors, lex) == rem);
  CHECK(normal_form(P(r, "0"), divisors, lex).is_zero());
}

TEST_CASE("buchberger: line meets circle") {
  RingPtr r = make_ring({"x", "y"});
  auto lex = MonomialOrder::lex(r);
  auto gb = buchberger(ideal_of(r, {"x^2 + y^2 - 1", "x - y"}), lex);
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0] == P(r, "2*y^2 - 1"));  // ascending leading monomials
  CHECK(gb.elements[1] == P(r, "x - y"));
  CHECK(!gb.stats.from_cache);
  CHECK(gb.stats.basis_size == 2);

  // Inputs lie in the ideal of the basis.
  for (const auto& g : {P(r, "x^2 + y^2 - 1"), P(r, "x - y")})
    CHECK(normal_form(g, gb.elements, lex).is_zero());

  CHECK(buchberger(Ideal(r), lex).elements.empty());
  auto unit = buchberger(ideal_of(r, {"2"}), lex);
  REQUIRE(unit.elements.size() == 1);
  CHECK(unit.elements[0] == P(r, "1"));
}

TEST_CASE("eliminating a curve parameter") {
  RingPtr r = make_ring({"x", "y", "t"});
  Ideal ideal = ideal_of(r, {"x - t", "y - t^2"});
  Ideal elim = eliminate(ideal, {0, 1});
  REQUIRE(elim.gens.size() == 1);
  CHECK(elim.gens[0] == P(r, "x^2 - y"));
}

TEST_CASE("saturation") {
  RingPtr r = make_ring({"x", "y"});
  Ideal sat = saturate(ideal_of(r, {"x*y"}), P(r, "x"));
  REQUIRE(sat.gens.size() == 1);
  CHECK(sat.gens[0] == P(r, "y"));

  Ideal unit = saturate(ideal_of(r, {"x^2"}), P(r, "x"));
  CHECK(is_unit_ideal(unit));

  // Idempotent, and contains the original ideal.
  Ideal twice = saturate(sat, P(r, "x"));
  CHECK(radical_equal(sat, twice));
  CHECK(radical_membership(P(r, "x*y"), sat));

  // Saturating by an ideal removes components inside its locus: the variety
  // of <x*(x-y), y*(x-y)> is the diagonal plus the origin; saturating by
  // <x, y> strips the origin and leaves the diagonal.
  Ideal by_ideal = saturate(ideal_of(r, {"x^2 - x*y", "x*y - y^2"}),
                            ideal_of(r, {"x", "y"}));
  CHECK(radical_membership(P(r, "x - y"), by_ideal));
  CHECK(!radical_membership(P(r, "x"), by_ideal));
}

TEST_CASE("radical membership") {
  RingPtr r = make_ring({"x", "y"});
  CHECK(radical_membership(P(r, "x"), ideal_of(r, {"x^2"})));
  CHECK(!radical_membership(P(r, "x"), ideal_of(r, {"y"})));
  CHECK(radical_membership(P(r, "0"), Ideal(r)));
  CHECK(radical_membership(P(r, "x + y"), ideal_of(r, {"x", "y"})));
  CHECK(radical_equal(ideal_of(r, {"x^2", "y"}), ideal_of(r, {"x", "y^2"})));
  CHECK(!radical_equal(ideal_of(r, {"x"}), ideal_of(r, {"y"})));
}

TEST_CASE("ideal intersection") {
  RingPtr r = make_ring({"x", "y"});
  Ideal meet = ideal_intersection(ideal_of(r, {"x"}), ideal_of(r, {"y"}));
  REQUIRE(meet.gens.size() == 1);
  CHECK(meet.gens[0] == P(r, "x*y"));

  // Membership in the intersection is membership in both.
  Ideal a = ideal_of(r, {"x^2 - y"}), b = ideal_of(r, {"y - 1"});
  Ideal ab = ideal_intersection(a, b);
  for (const auto& probe :
       {P(r, "x^2 - y"), P(r, "y - 1"), P(r, "x^2*y - x^2 - y^2 + y")}) {
    bool in_both = radical_membership(probe, a) && radical_membership(probe, b);
    CHECK(radical_membership(probe, ab) == in_both);
  }
  CHECK(ideal_intersection(Ideal(r), ideal_of(r, {"x"})).is_zero_ideal());
}

TEST_CASE("variety dimension") {
  RingPtr r2 = make_ring({"x", "y"});
  CHECK(ideal_dimension(ideal_of(r2, {"x"})) == 1);
  CHECK(ideal_dimension(ideal_of(r2, {"1"})) == -1);
  CHECK(ideal_dimension(ideal_of(r2, {"x*y - 1"})) == 1);
  CHECK(ideal_dimension(Ideal(r2)) == 2);
  CHECK(ideal_dimension(ideal_of(r2, {"x", "y"})) == 0);

  RingPtr r3 = make_ring({"x", "y", "z"});
  CHECK(ideal_dimension(Ideal(r3)) == 3);
  CHECK(ideal_dimension(ideal_of(r3, {"x*y", "x*z"})) == 2);  // plane union line
}

TEST_CASE("sylvester resultant") {
  RingPtr r = make_ring({"x", "y"});
  bool degen = true;
  Polynomial res = resultant(P(r, "x^2 - 2"), P(r, "x - y"), 0, &degen);
  CHECK(res == P(r, "y^2 - 2"));
  CHECK(!degen);

  // Common root forces a vanishing resultant.
  Polynomial common =
      resultant(P(r, "x^2 - 3*x + 2"), P(r, "x^2 - 4*x + 3"), 0);
  CHECK(common.is_zero());  // both vanish at x = 1

  // res(x - a, x - b) = a - b convention check.
  RingPtr rab = make_ring({"x", "a", "b"});
  CHECK(resultant(P(rab, "x - a"), P(rab, "x - b"), 0) == P(rab, "a - b"));

  // Non-constant leading coefficient is reported.
  resultant(P(r, "y*x^2 + 1"), P(r, "x - y"), 0, &degen);
  CHECK(degen);

  CHECK(resultant(P(r, "0"), P(r, "x"), 0).is_zero());
  CHECK(resultant(P(r, "3"), P(r, "5"), 0) == P(r, "1"));
  CHECK(resultant(P(r, "y"), P(r, "x^2 + x"), 0) == P(r, "y^2"));
}

TEST_CASE("laurent normalization") {
  RingPtr r = make_ring({"m", "l"});
  Ideal norm = laurent_normalize(ideal_of(r, {"m*l - m"}), {0, 1});
  REQUIRE(norm.gens.size() == 1);
  CHECK(norm.gens[0] == P(r, "l - 1"));

  // Idempotent and monotone.
  Ideal again = laurent_normalize(norm, {0, 1});
  CHECK(radical_equal(norm, again));
  CHECK(radical_membership(P(r, "m*l - m"), norm));
}

TEST_CASE("ring restriction and lifting") {
  RingPtr big = make_ring({"x", "y", "t"});
  RingPtr small = make_ring({"x", "y"});
  Ideal in_big = ideal_of(big, {"x^2 - y"});
  Ideal down = restrict_to(in_big, small);
  CHECK(down.ring->size() == 2);
  CHECK(down.gens[0] == P(small, "x^2 - y"));
  CHECK(down.gens[0].lifted(big) == P(big, "x^2 - y"));

  CHECK_THROWS_AS(restrict_to(ideal_of(big, {"t - 1"}), small), RingMismatch);
  CHECK_THROWS_AS(restrict_to(in_big, make_ring({"y", "x"})), RingMismatch);
  CHECK(fresh_var_name(*big, "t") == "t1");
  CHECK(fresh_var_name(*big, "u") == "u");
}

TEST_CASE("smith normal form") {
  using M = std::vector<std::vector<Integer>>;
  auto divs = [](const M& m) { return smith_normal_form(m).divisors; };

  CHECK(divs({{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(divs({{2, 4}, {4, 8}}) == std::vector<Integer>{2});
  CHECK(divs({{0, 0}, {0, 0}}).empty());
  CHECK(divs({{1, 2}, {3, 4}, {5, 6}}) == std::vector<Integer>{1, 2});
  CHECK(divs({{6, 4}, {4, 6}}) == std::vector<Integer>{2, 10});
  CHECK(divs({}).empty());
  CHECK(smith_normal_form({{3, 1, 2}}).rank == 1);
  CHECK(divs({{-5}}) == std::vector<Integer>{5});
}

TEST_CASE("groebner budgets abort loudly") {
  RingPtr r = make_ring({"x", "y", "z"});
  Ideal hard = ideal_of(
      r, {"x^2 + y^2 + z^2 - 1", "x*y + y*z + z*x", "x*y*z - 1"});

  GroebnerOptions tiny_pairs;
  tiny_pairs.pair_budget = 0;
  tiny_pairs.stage = "unit-test";
  try {
    buchberger(hard, MonomialOrder::grevlex(r), tiny_pairs);
    FAIL("expected TimeoutError");
  } catch (const TimeoutError& e) {
    CHECK(e.stage == "unit-test");
  }

  GroebnerOptions low_degree;
  low_degree.degree_cap = 1;
  CHECK_THROWS_AS(buchberger(hard, MonomialOrder::grevlex(r), low_degree),
                  TimeoutError);

  GroebnerOptions no_time;
  no_time.time_budget = std::chrono::milliseconds(0);  // unlimited
  CHECK_NOTHROW(buchberger(hard, MonomialOrder::grevlex(r), no_time));
}

namespace {

struct MemCache final : GbCache {
  std::map<std::string, std::vector<Polynomial>> entries;
  int loads = 0, stores = 0;
  std::optional<std::vector<Polynomial>> load(const std::string& key,
                                              const RingPtr&) override {
    ++loads;
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key,
             const std::vector<Polynomial>& basis) override {
    ++stores;
    entries[key] = basis;
  }
};

}  // namespace

TEST_CASE("groebner cache round trip") {
  RingPtr r = make_ring({"x", "y"});
  Ideal ideal = ideal_of(r, {"x^2 + y^2 - 1", "x - y"});
  auto lex = MonomialOrder::lex(r);

  MemCache cache;
  GroebnerOptions opts;
  opts.cache = &cache;

  auto cold = buchberger(ideal, lex, opts);
  CHECK(!cold.stats.from_cache);
  CHECK(cache.stores == 1);
  auto warm = buchberger(ideal, lex, opts);
  CHECK(warm.stats.from_cache);
  CHECK(strings(warm.elements) == strings(cold.elements));

  // The key ignores generator order and duplicates.
  Ideal shuffled = ideal_of(r, {"x - y", "x^2 + y^2 - 1", "x - y"});
  CHECK(groebner_cache_key(shuffled, lex) == groebner_cache_key(ideal, lex));
  CHECK(groebner_cache_key(ideal, MonomialOrder::grevlex(r)) !=
        groebner_cache_key(ideal, lex));
}

namespace {

Polynomial random_poly_in(const RingPtr& r, std::mt19937& rng,
                          const std::vector<VarId>& vars, int max_terms,
                          std::uint32_t max_exp) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial p = Polynomial::zero(r);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m = Monomial::one();
    for (VarId v : vars) {
      std::uint32_t e = exp(rng);
      if (e) m = m * Monomial::var(v, e);
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    p += Polynomial::term(r, m, Rational(c));
  }
  return p;
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int max_terms,
                       std::uint32_t max_exp) {
  std::vector<VarId> all;
  for (VarId v = 0; v < r->size(); ++v) all.push_back(v);
  return random_poly_in(r, rng, all, max_terms, max_exp);
}

}  // namespace

TEST_CASE("buchberger criterion holds on random systems") {
  RingPtr r = make_ring({"x", "y", "z"});
  auto order = MonomialOrder::grevlex(r);
  std::mt19937 rng(20240801);

  for (int trial = 0; trial < 25; ++trial) {
    Ideal ideal(r);
    std::uniform_int_distribution<int> ngens(2, 3);
    int n = ngens(rng);
    for (int g = 0; g < n; ++g) ideal.add(random_poly(r, rng, 3, 2));

    auto gb = buchberger(ideal, order);
    // Every S-polynomial of the basis reduces to zero.
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
      for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
        const Term& li = gb.elements[i].leading_term(order);
        const Term& lj = gb.elements[j].leading_term(order);
        Monomial lcm = Monomial::lcm(li.mono, lj.mono);
        Polynomial s =
            gb.elements[i].times_term(*li.mono.divide_into(lcm),
                                      Rational(1) / li.coeff) -
            gb.elements[j].times_term(*lj.mono.divide_into(lcm),
                                      Rational(1) / lj.coeff);
        CHECK(normal_form(s, gb.elements, order).is_zero());
      }
    // And the inputs are in the span.
    for (const auto& g : ideal.gens)
      CHECK(normal_form(g, gb.elements, order).is_zero());
  }
}

TEST_CASE("elimination matches resultants on monic curves") {
  std::mt19937 rng(20240802);

  // Two variables: eliminate y from <f, g> with f monic in y (so the
  // projection is closed and the resultant has no leading degeneracy).
  RingPtr r2 = make_ring({"x", "y"});
  for (int trial = 0; trial < 8; ++trial) {
    Polynomial f = P(r2, "y^2") +
                   random_poly_in(r2, rng, {0}, 2, 2) * P(r2, "y") +
                   random_poly_in(r2, rng, {0}, 2, 2);
    Polynomial g = random_poly(r2, rng, 3, 2);
    if (g.degree_in(1) == 0) g += P(r2, "y");

    Ideal two(r2, {f, g});
    Ideal elim = eliminate(two, {0});
    Polynomial res = resultant(f, g, 1);
    Ideal res_ideal(r2);
    if (!res.is_zero()) res_ideal.add(res);
    CHECK(radical_equal(elim, res_ideal));
  }

  // Three variables: eliminate z, compare to the resultant surface.
  RingPtr r3 = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 4; ++trial) {
    Polynomial f = P(r3, "z^2") +
                   random_poly_in(r3, rng, {0, 1}, 2, 1) * P(r3, "z") +
                   random_poly_in(r3, rng, {0, 1}, 2, 1);
    Polynomial g = random_poly_in(r3, rng, {0, 1}, 2, 1) * P(r3, "z") +
                   random_poly_in(r3, rng, {0, 1}, 2, 1);
    if (g.degree_in(2) == 0) g += P(r3, "z");

    Ideal two(r3, {f, g});
    Ideal elim = eliminate(two, {0, 1});
    Polynomial res = resultant(f, g, 2);
    Ideal res_ideal(r3);
    if (!res.is_zero()) res_ideal.add(res);
    CHECK(radical_equal(elim, res_ideal));
  }
}

TEST_CASE("dimension matches subset search on monomial ideals") {
  std::mt19937 rng(20240803);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<std::size_t> nvars(3, 6);
    std::size_t n = nvars(rng);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    RingPtr r = make_ring(names);

    std::uniform_int_distribution<int> ngens(2, 5);
    std::uniform_int_distribution<std::uint32_t> exp(0, 2);
    Ideal ideal(r);
    std::vector<std::vector<VarId>> supports;
    int gcount = ngens(rng);
    for (int g = 0; g < gcount; ++g) {
      Monomial m = Monomial::one();
      for (VarId v = 0; v < n; ++v) {
        std::uint32_t e = exp(rng);
        if (e) m = m * Monomial::var(v, e);
      }
      if (m.is_one()) m = Monomial::var(0);
      ideal.add(Polynomial::term(r, m, Rational(1)));
      std::vector<VarId> s;
      for (const auto& [v, e] : m.entries()) s.push_back(v);
      supports.push_back(std::move(s));
    }

    // Brute force: largest variable subset S such that no generator is
    // supported entirely inside S.
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool independent = true;
      for (const auto& s : supports) {
        bool inside = true;
        for (VarId v : s)
          if (!(mask & (1u << v))) {
            inside = false;
            break;
          }
        if (inside) {
          independent = false;
          break;
        }
      }
      if (independent)
        best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
    }
    CHECK(ideal_dimension(ideal) == best);
  }
}

TEST_CASE("reduced bases are canonical") {
  RingPtr r = make_ring({"x", "y", "z"});
  Ideal a = ideal_of(r, {"x^2 - y", "y^2 - z", "x*z - y^2 + x"});
  Ideal b(r, {a.gens[2], a.gens[0], a.gens[1]});  // permuted generators

  auto order = MonomialOrder::grevlex(r);
  auto ga = buchberger(a, order);
  auto gb = buchberger(b, order);
  CHECK(strings(ga.elements) == strings(gb.elements));

  // Scaled generators produce the same reduced basis too.
  Ideal c(r);
  for (const auto& g : a.gens) c.add(Rational(-7, 3) * g);
  CHECK(strings(buchberger(c, order).elements) == strings(ga.elements));
}
