#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "vinwit/error.hpp"
#include "vinwit/linalg.hpp"
#include "vinwit/zariski.hpp"

using namespace vinwit;

namespace {

IntMatrix a_prime() {
  return IntMatrix::from_rows(
      {{2, -1, 0, 0, -1}, {-2, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {-1, 0, 0, -1, 2}});
}
std::vector<GroupElement> gens() { return reflection_generators(CartanMatrix::from_integer(a_prime())); }

IntPolynomial poly(std::vector<long> c) {
  std::vector<Integer> z(c.begin(), c.end());
  return IntPolynomial(z);
}

IntMatrix permutation_matrix(const std::vector<int>& p) {
  IntMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
  return m;
}

// Roots of f mod p by brute force, with multiplicity of the linear factors ignored.
int roots_mod(const IntPolynomial& f, long p) {
  int n = 0;
  for (long x = 0; x < p; ++x) {
    Integer v = f.evaluate(x) % p;
    if (v == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("Burnside span") {
  CHECK(burnside_span_dim(gens()) == 25);
  CHECK(burnside_span_dim({GroupElement{IntMatrix::identity(5), {}}}) == 1);
  CHECK(burnside_span_dim({gens()[0]}) == 2);
  // The permutation representation of S5 is trivial + standard: 1 + 16.
  std::vector<GroupElement> s5{{permutation_matrix({1, 0, 2, 3, 4}), {0}}, {permutation_matrix({1, 2, 3, 4, 0}), {1}}};
  EchelonBasis<Rational> all(25);
  std::vector<int> p{0, 1, 2, 3, 4};
  do {
    IntMatrix m = permutation_matrix(p);
    std::vector<Rational> v(m.data().begin(), m.data().end());
    all.insert(v);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(all.size() == 17);
  CHECK(burnside_span_dim(s5) == 17);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(IntMatrix::identity(5)) == poly({-1, 5, -10, 10, -5, 1}));
  for (const auto& g : gens()) CHECK(char_poly(g.matrix) == poly({1, -3, 2, 2, -3, 1}));  // (x-1)^4 (x+1)
  IntMatrix m = gens()[0].matrix * gens()[1].matrix;
  IntPolynomial cp = char_poly(m);
  CHECK(cp.degree() == 5);
  CHECK(cp.is_monic());
  // Constant term det(-M) = (-1)^5 det(M) = -1.
  CHECK(cp.coeff(0) == -oracle::laplace_det(m));
  CHECK(cp.coeff(0) == -1);
  // det(xI - M) at x = 2 by Laplace expansion.
  IntMatrix xm = IntMatrix::identity(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) xm(i, j) = (i == j ? 2 : 0) - m(i, j);
  CHECK(cp.evaluate(2) == oracle::laplace_det(xm));
}

TEST_CASE("factor patterns mod p") {
  CHECK(factor_pattern_mod_p(poly({1, 0, 1}), 5) == FactorPattern{{1, 1}, true});
  CHECK(factor_pattern_mod_p(poly({1, 0, 1}), 3) == FactorPattern{{2}, true});
  IntPolynomial f = poly({-1, -1, 0, 0, 0, 1});  // x^5 - x - 1
  CHECK(factor_pattern_mod_p(f, 5).degrees == std::vector<int>{5});
  CHECK(roots_mod(f, 5) == 0);
  CHECK_FALSE(factor_pattern_mod_p(poly({1, -2, 1}), 7).squarefree);
  for (long p : {2L, 3L, 7L, 11L, 13L}) {
    auto pat = factor_pattern_mod_p(f, static_cast<std::uint64_t>(p));
    CHECK(std::accumulate(pat.degrees.begin(), pat.degrees.end(), 0) == 5);
    CHECK(std::count(pat.degrees.begin(), pat.degrees.end(), 1) == roots_mod(f, p));
  }
}

TEST_CASE("irreducibility over Q") {
  CHECK(irreducibility_over_q(poly({-1, -1, 0, 0, 0, 1})).verdict == Irreducibility::irreducible);
  CHECK(irreducibility_over_q(poly({1, -3, 2, 2, -3, 1})).verdict == Irreducibility::reducible);
  // (x^2 + x + 1)(x^3 - x + 1) has no rational root.
  CHECK(irreducibility_over_q(poly({1, 1, 1}) * poly({1, -1, 0, 1})).verdict == Irreducibility::reducible);
  CHECK(irreducibility_over_q(poly({-2, 0, 0, 0, 0, 1})).verdict == Irreducibility::irreducible);
  CHECK(irreducibility_over_q(poly({2, 0, 1})).verdict == Irreducibility::irreducible);
}

TEST_CASE("S5 Galois certificates") {
  CHECK_THROWS_AS(galois_s5_certificate(poly({1, -3, 2, 2, -3, 1}), 100), InvalidInput);
  // Patterns of x^5 - x - 1 from an independent factorisation: {5} first at 3,
  // {2,1,1,1} squarefree first at 163 (151 divides the discriminant 2869 = 19 * 151).
  auto short_budget = galois_s5_certificate(poly({-1, -1, 0, 0, 0, 1}), 100);
  CHECK(short_budget.five_cycle_prime == 3u);
  CHECK_FALSE(short_budget.transposition_prime);
  auto c = galois_s5_certificate(poly({-1, -1, 0, 0, 0, 1}), 200);
  CHECK(c.found());
  CHECK(c.five_cycle_prime == 3u);
  CHECK(c.transposition_prime == 163u);
  // x^5 - 2 has Galois group of order 20: no transposition ever appears.
  auto f20 = galois_s5_certificate(poly({-2, 0, 0, 0, 0, 1}), 10000);
  CHECK_FALSE(f20.transposition_prime);
  CHECK(f20.five_cycle_prime);
}

TEST_CASE("density certificate for the even subgroup") {
  auto even = even_subgroup_generators(gens());
  auto cert = certify_zariski_dense(even);
  REQUIRE(cert.complete());
  CHECK(cert.span_dimension == 25);
  CHECK(cert.invariant_form_dimension == 0);
  CHECK(revalidate(cert, even).empty());
  CHECK(evaluate_word(gens(), cert.witness_expanded).matrix == cert.witness_matrix);
  CHECK(cert.witness_expanded.size() % 2 == 0);
  CHECK(cert.witness_matrix * cert.companion_matrix != cert.companion_matrix * cert.witness_matrix);
  auto again = certify_zariski_dense(even);
  CHECK(again.witness_word == cert.witness_word);
  CHECK(again.companion_word == cert.companion_word);
  CHECK(again.prime_irreducible == cert.prime_irreducible);
  CHECK(again.prime_transposition == cert.prime_transposition);

  DensityCertificate forged = cert;
  forged.prime_transposition = cert.prime_irreducible;
  CHECK_FALSE(revalidate(forged, even).empty());
}

TEST_CASE("density certificate failures are named") {
  auto single = certify_zariski_dense({gens()[0]});
  CHECK_FALSE(single.complete());
  CHECK(single.span_dimension == 2);

  // Two integer matrices preserving diag(1,1,1,1,-1): a coordinate swap and a
  // Lorentz reflection in the vector (1,1,1,0,1) of norm 2.
  IntMatrix swap = permutation_matrix({1, 0, 2, 3, 4});
  IntMatrix j = IntMatrix::identity(5);
  j(4, 4) = -1;
  IntMatrix v(5, 1, {1, 1, 1, 0, 1});
  IntMatrix refl = IntMatrix::identity(5) - v * v.transpose() * j;  // x - <x,v> v with <v,v> = 2
  CHECK(refl.transpose() * j * refl == j);
  auto lorentz = certify_zariski_dense({{swap, {0}}, {refl, {1}}}, DensityBudget{4, 100, 1000});
  CHECK_FALSE(lorentz.complete());
  CHECK(lorentz.invariant_form_dimension >= 1);
}
