#pragma once

// Integer polynomials and polynomial arithmetic over prime fields.

#include <cstdint>
#include <string>
#include <vector>

#include "vinwit/numfield.hpp"

namespace vinwit {

/// Integer polynomial, coefficients stored from the constant term upwards.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& x) const;
  IntPolynomial derivative() const;

  /// e.g. "x^5 - 3*x^2 + 1".
  std::string str() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a by a monic b; returns false if b is not monic.
bool divide_by_monic(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& quotient, IntPolynomial& remainder);

/// Degree of gcd(f, f') over Q is zero.
bool squarefree_over_q(const IntPolynomial& f);

bool is_prime(std::uint64_t n);
/// Primes p with 2 <= p <= bound, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

namespace modp {

/// Polynomial over F_p, coefficients from the constant term upwards, trimmed.
using Poly = std::vector<std::uint64_t>;

Poly reduce(const IntPolynomial& f, std::uint64_t p);
void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
/// a mod b; b must be nonzero.
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly div(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly make_monic(const Poly& a, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

/// Squarefree decomposition of a monic polynomial: pairs (factor, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f, std::uint64_t p);
/// Distinct-degree factorisation of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);

}  // namespace modp

}  // namespace vinwit
