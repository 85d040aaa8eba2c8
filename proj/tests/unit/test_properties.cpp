#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vinwit/coset.hpp"
#include "vinwit/smith.hpp"
#include "vinwit/vinberg.hpp"

using namespace vinwit;

namespace {

std::size_t g_cases = 0;
constexpr std::size_t kFieldCases = 2500, kGaloisCases = 1500, kCongruenceCases = 1500, kParityCases = 1500,
                      kSmithCases = 1500, kCosetCases = 1500;

std::mt19937_64& rng() {
  static std::mt19937_64 r(20240917);
  return r;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

AlgNum nonzero_alg() {
  for (;;) {
    AlgNum a = oracle::random_alg(rng());
    if (!a.is_zero()) return a;
  }
}

// Product of random elementary integer operations: unimodular by construction.
IntMatrix random_unimodular(std::size_t n) {
  IntMatrix s = IntMatrix::identity(n);
  for (int k = 0; k < 6; ++k) {
    std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = uniform(-2, 2);
    if (uniform(0, 3) == 0) e(i, i) = -1;
    s = s * e;
  }
  return s;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("field axioms and exact signs") {
    for (std::size_t k = 0; k < kFieldCases; ++k, ++g_cases) {
      AlgNum a = oracle::random_alg(rng()), b = oracle::random_alg(rng()), c = oracle::random_alg(rng());
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE((a * b).sign() == a.sign() * b.sign());
      if (!a.is_zero()) REQUIRE(a * a.inverse() == AlgNum(1));
      if (k < 1000) {
        AlgNum z = nonzero_alg();
        REQUIRE(z.sign() == oracle::decimal_sign(z, 340));
      }
    }
  }

  TEST_CASE("Galois maps are involutive field automorphisms") {
    auto maps = GaloisMap::all();
    for (std::size_t k = 0; k < kGaloisCases; ++k, ++g_cases) {
      const GaloisMap& g = maps[k % maps.size()];
      AlgNum a = oracle::random_alg(rng()), b = oracle::random_alg(rng());
      REQUIRE((a + b).apply(g) == a.apply(g) + b.apply(g));
      REQUIRE((a * b).apply(g) == a.apply(g) * b.apply(g));
      REQUIRE(a.apply(g).apply(g) == a);
      if (g.is_identity()) REQUIRE(a.apply(g) == a);
    }
  }

  TEST_CASE("signature is a congruence invariant") {
    AlgMatrix sigma = cartan_from_diagram(pentagon_diagram()).entries;
    SignatureReport base = signature(sigma);
    for (std::size_t k = 0; k < kCongruenceCases; ++k, ++g_cases) {
      if (k % 3 == 0) {
        AlgMatrix s = to_field(random_unimodular(5));
        REQUIRE(signature(s.transpose() * sigma * s) == base);
      } else {
        std::size_t n = static_cast<std::size_t>(uniform(2, 5));
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) {
            Rational q(uniform(-3, 3), uniform(1, 3));
            q.canonicalize();
            m(i, j) = m(j, i) = q;
          }
        RatMatrix s = to_rational(random_unimodular(n));
        SignatureReport sm = signature(m);
        REQUIRE(signature(s.transpose() * m * s) == sm);
        auto f = oracle::float_signature(to_field(m), 1e-9);
        REQUIRE(f == std::array<std::size_t, 3>{sm.positives, sm.zeros, sm.negatives});
      }
    }
  }

  TEST_CASE("determinant parity of words") {
    auto gens = reflection_generators(
        CartanMatrix::from_integer(IntMatrix::from_rows({{2, -1, 0, 0, -1},
                                                         {-2, 2, -1, 0, 0},
                                                         {0, -1, 2, -1, 0},
                                                         {0, 0, -1, 2, -1},
                                                         {-1, 0, 0, -1, 2}})));
    for (std::size_t k = 0; k < kParityCases; ++k, ++g_cases) {
      Word w(static_cast<std::size_t>(uniform(0, 30)));
      for (auto& x : w) x = uniform(0, 4);
      IntMatrix m = evaluate_word(gens, w).matrix;
      Integer expected = w.size() % 2 == 0 ? 1 : -1;
      REQUIRE(oracle::laplace_det(m) == expected);
      REQUIRE(determinant(m) == expected);
    }
  }

  TEST_CASE("Smith normal form divisibility chains") {
    for (std::size_t k = 0; k < kSmithCases; ++k, ++g_cases) {
      std::size_t r = static_cast<std::size_t>(uniform(1, 4)), c = static_cast<std::size_t>(uniform(1, 4));
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(0, 2) == 0 ? 0 : uniform(-9, 9);
      SmithForm s = smith_normal_form(m);
      REQUIRE(s.u * m * s.v == s.diagonal_form);
      REQUIRE((s.u * s.u_inv).is_identity());
      REQUIRE((s.v * s.v_inv).is_identity());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j) REQUIRE(s.diagonal_form(i, j) == 0);
      auto d = s.diagonal();
      for (std::size_t i = 0; i + 1 < d.size(); ++i) REQUIRE(d[i + 1] % d[i] == 0);
      REQUIRE(d == oracle::determinant_divisor_factors(m));
      REQUIRE(s.u_inv * s.diagonal_form * s.v_inv == m);
    }
  }

  TEST_CASE("coset tables satisfy every relator") {
    const std::vector<std::pair<CoxeterDiagram, std::size_t>> groups{
        {path_diagram({3}), 6},     {path_diagram({4}), 8},     {path_diagram({6}), 12},
        {path_diagram({3, 3}), 24}, {path_diagram({4, 3}), 48}, {path_diagram({5, 3}), 120}};
    for (std::size_t k = 0; k < kCosetCases; ++k, ++g_cases) {
      const auto& [d, order] = groups[k % groups.size()];
      Presentation p = coxeter_presentation(d);
      std::vector<FreeWord> sub(static_cast<std::size_t>(uniform(0, 2)));
      for (auto& w : sub) {
        w.resize(static_cast<std::size_t>(uniform(1, 6)));
        for (auto& x : w) x = uniform(1, static_cast<int>(d.rank()));
      }
      auto res = todd_coxeter(p, sub);
      REQUIRE(res.status == EnumerationStatus::complete);
      const CosetTable& t = *res.table;
      REQUIRE(t.valid_for(p));
      for (const auto& rel : p.relators())
        for (std::size_t c = 0; c < t.index(); ++c) REQUIRE(t.act(static_cast<int>(c), rel) == static_cast<int>(c));
      for (const auto& w : sub) REQUIRE(t.act(0, w) == 0);
      REQUIRE(order % t.index() == 0);
    }
  }

  TEST_CASE("case count") {
    CHECK(g_cases == 10000);
  }
}
