#pragma once

// Zariski-density certificates for finitely generated subgroups of GL_5(Z).
//
// The certificate is a conjunction of finitely checkable facts:
//   * the generators span the full matrix algebra (absolute irreducibility),
//   * no nonzero bilinear form is invariant,
//   * some element has a characteristic polynomial with Galois group S_5,
//     witnessed by a prime where it stays irreducible and a prime where it
//     splits as quadratic times three distinct linears,
//   * a second element with distinct eigenvalues does not commute with it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vinwit/polynomial.hpp"
#include "vinwit/vinberg.hpp"

namespace vinwit {

/// Dimension over Q of the algebra generated by the matrices (plus identity).
std::size_t burnside_span_dim(const std::vector<GroupElement>& gens, std::size_t dim = 0);

/// Monic characteristic polynomial det(xI - M) (Faddeev-LeVerrier, exact).
IntPolynomial char_poly(const IntMatrix& m);

struct FactorPattern {
  /// Degrees of the irreducible factors, with multiplicity, in decreasing order.
  std::vector<int> degrees;
  bool squarefree = false;
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

FactorPattern factor_pattern_mod_p(const IntPolynomial& f, std::uint64_t prime);

enum class Irreducibility { irreducible, reducible };

struct IrreducibilityResult {
  Irreducibility verdict;
  /// How the verdict was reached, e.g. "pattern {5} mod 7" or "rational root 1".
  std::string reason;
};

/// Exact irreducibility over Q for degree <= 5 (mod-p shortcuts first, then a
/// rational-root and quadratic-factor search).
IrreducibilityResult irreducibility_over_q(const IntPolynomial& f);

struct S5Certificate {
  std::optional<std::uint64_t> five_cycle_prime;     // pattern {5}
  std::optional<std::uint64_t> transposition_prime;  // squarefree pattern {2,1,1,1}
  bool found() const { return five_cycle_prime && transposition_prime; }
};

/// Searches primes up to `prime_budget`. Throws InvalidInput if f is not of
/// degree 5, not squarefree, or reducible over Q.
S5Certificate galois_s5_certificate(const IntPolynomial& f, std::uint64_t prime_budget);

struct DensityCertificate {
  std::size_t dimension = 5;
  std::size_t span_dimension = 0;
  std::size_t invariant_form_dimension = 0;

  /// Words index the generator list handed to the certifier; the expanded
  /// words are in the underlying generators' own alphabet.
  std::optional<Word> witness_word;
  Word witness_expanded;
  IntMatrix witness_matrix;
  IntPolynomial witness_poly;
  std::uint64_t prime_irreducible = 0;
  std::uint64_t prime_transposition = 0;

  std::optional<Word> companion_word;
  Word companion_expanded;
  IntMatrix companion_matrix;
  IntPolynomial companion_poly;

  std::size_t words_examined = 0;
  /// Empty iff the certificate is complete.
  std::vector<std::string> inconclusive;

  bool complete() const { return inconclusive.empty(); }
};

struct DensityBudget {
  std::size_t word_length = 8;
  std::uint64_t prime_bound = 1000;
  /// Cap on words visited by each of the two searches.
  std::size_t max_words = 200000;
};

DensityCertificate certify_zariski_dense(const std::vector<GroupElement>& gens, const DensityBudget& budget = {});

/// Re-runs every component check of a complete certificate against the
/// generators; returns the list of failed checks (empty = valid).
std::vector<std::string> revalidate(const DensityCertificate& cert, const std::vector<GroupElement>& gens);

}  // namespace vinwit
