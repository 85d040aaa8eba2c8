#pragma once

// Exact arithmetic in Q and in the real multiquadratic field Q(√2, √3, √5).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vinwit {

using Integer = mpz_class;
using Rational = mpq_class;  // GMP keeps these canonical: reduced, denominator > 0

/// An automorphism of Q(√2, √3, √5), given by the signs it puts on √2, √3, √5.
struct GaloisMap {
  std::array<int, 3> signs{1, 1, 1};

  bool is_identity() const { return signs == std::array<int, 3>{1, 1, 1}; }
  /// Sign acquired by the basis radical with the given prime mask.
  int sign_on_mask(unsigned mask) const {
    int s = 1;
    for (unsigned b = 0; b < 3; ++b)
      if (mask & (1u << b)) s *= signs[b];
    return s;
  }
  /// All eight automorphisms, identity first, in lexicographic order of the
  /// sign vector read with +1 before -1.
  static std::array<GaloisMap, 8> all();

  friend bool operator==(const GaloisMap&, const GaloisMap&) = default;
};

/// Element of Q(√2, √3, √5) stored over the basis of square roots of
/// squarefree products of {2, 3, 5}.
///
/// Storage is indexed by a prime mask (bit 0 = 2, bit 1 = 3, bit 2 = 5), so the
/// product of basis elements for masks a and b is (product of primes in a & b)
/// times the basis element for a ^ b. The public coordinate order is
/// {1, √2, √3, √5, √6, √10, √15, √30}.
class AlgNum {
 public:
  static constexpr std::size_t kDim = 8;

  AlgNum() = default;
  AlgNum(long v) { c_[0] = v; }  // NOLINT: implicit by design of a numeric type
  AlgNum(const Rational& q) { c_[0] = q; }  // NOLINT
  AlgNum(const Integer& z) { c_[0] = z; }  // NOLINT

  /// √r for r in {1, 2, 3, 5, 6, 10, 15, 30}.
  static AlgNum sqrt_of(int radicand);
  /// Builds from coordinates in the public basis order.
  static AlgNum from_coords(const std::array<Rational, kDim>& coords);

  /// Coordinate in the public basis order.
  const Rational& coord(std::size_t i) const { return c_[kPublicToMask[i]]; }
  const Rational& coord_by_mask(unsigned mask) const { return c_[mask]; }
  std::array<Rational, kDim> coords() const;

  bool is_zero() const;
  bool is_rational() const;
  /// Set of prime masks whose coordinate is nonzero (bit m set iff mask m used).
  unsigned support() const;
  /// Rational part; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  /// Exact sign by dyadic interval refinement.
  int sign() const;
  /// Decimal approximation for display and testing only.
  double to_double() const;

  AlgNum inverse() const;
  AlgNum apply(const GaloisMap& g) const;

  /// "a0 + a1*r2 + ... + a7*r30", zero terms omitted, "0" for zero.
  std::string str() const;
  static AlgNum parse(std::string_view text);

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);
  AlgNum operator-() const;

  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.c_ == b.c_; }
  friend bool operator<(const AlgNum& a, const AlgNum& b) { return (a - b).sign() < 0; }

  static constexpr std::array<unsigned, kDim> kPublicToMask{0, 1, 2, 4, 3, 5, 6, 7};
  static constexpr std::array<int, kDim> kRadicandOfMask{1, 2, 3, 6, 5, 10, 15, 30};

 private:
  std::array<Rational, kDim> c_{};
};

/// cos(π/m) for m in {2, 3, 4, 5, 6}.
AlgNum cos_pi_over(int m);

// Uniform field interface used by the generic linear algebra.
inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }
inline int sign_of(const AlgNum& a) { return a.sign(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const AlgNum& a) { return a.is_zero(); }

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace vinwit
