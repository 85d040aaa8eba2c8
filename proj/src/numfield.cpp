#include "vinwit/numfield.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "vinwit/error.hpp"

namespace vinwit {

namespace {

constexpr std::array<int, 3> kPrimes{2, 3, 5};

int mask_of_radicand(int r) {
  for (unsigned m = 0; m < AlgNum::kDim; ++m)
    if (AlgNum::kRadicandOfMask[m] == r) return static_cast<int>(m);
  return -1;
}

// Product of the primes common to two masks.
long common_factor(unsigned a, unsigned b) {
  long f = 1;
  unsigned both = a & b;
  for (unsigned i = 0; i < 3; ++i)
    if (both & (1u << i)) f *= kPrimes[i];
  return f;
}

// Flips the sign of √p for the prime with index `bit`.
AlgNum conjugate_in(const AlgNum& a, unsigned bit) {
  GaloisMap g;
  g.signs[bit] = -1;
  return a.apply(g);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::array<GaloisMap, 8> GaloisMap::all() {
  std::array<GaloisMap, 8> out;
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned b = 0; b < 3; ++b) out[i].signs[b] = (i & (4u >> b)) ? -1 : 1;
  return out;
}

AlgNum AlgNum::sqrt_of(int radicand) {
  int m = mask_of_radicand(radicand);
  if (m < 0)
    throw InvalidInput("sqrt_of: radicand " + std::to_string(radicand) +
                       " is not one of 1, 2, 3, 5, 6, 10, 15, 30");
  AlgNum a;
  a.c_[static_cast<unsigned>(m)] = 1;
  return a;
}

AlgNum AlgNum::from_coords(const std::array<Rational, kDim>& coords) {
  AlgNum a;
  for (std::size_t i = 0; i < kDim; ++i) a.c_[kPublicToMask[i]] = coords[i];
  return a;
}

std::array<Rational, AlgNum::kDim> AlgNum::coords() const {
  std::array<Rational, kDim> out;
  for (std::size_t i = 0; i < kDim; ++i) out[i] = coord(i);
  return out;
}

bool AlgNum::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (unsigned m = 1; m < kDim; ++m)
    if (sgn(c_[m]) != 0) return false;
  return true;
}

unsigned AlgNum::support() const {
  unsigned s = 0;
  for (unsigned m = 0; m < kDim; ++m)
    if (sgn(c_[m]) != 0) s |= 1u << m;
  return s;
}

int AlgNum::sign() const {
  if (is_rational()) return sgn(c_[0]);
  if (is_zero()) return 0;
  // √r lies in [L, L+1] / 2^k with L = floor(sqrt(r * 4^k)). Refine k until the
  // interval sum of all terms excludes zero.
  for (unsigned long bits = 32;; bits *= 2) {
    Integer scale = 1;
    scale <<= bits;
    Rational lo = 0, hi = 0;
    for (unsigned m = 0; m < kDim; ++m) {
      const Rational& c = c_[m];
      if (sgn(c) == 0) continue;
      if (m == 0) {
        lo += c;
        hi += c;
        continue;
      }
      Integer big = Integer(kRadicandOfMask[m]) << (2 * bits);
      Integer root;
      mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
      Rational r_lo(root, scale), r_hi(Integer(root + 1), scale);
      r_lo.canonicalize();
      r_hi.canonicalize();
      if (sgn(c) > 0) {
        lo += c * r_lo;
        hi += c * r_hi;
      } else {
        lo += c * r_hi;
        hi += c * r_lo;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

double AlgNum::to_double() const {
  double v = 0;
  for (unsigned m = 0; m < kDim; ++m)
    if (sgn(c_[m]) != 0) v += c_[m].get_d() * std::sqrt(static_cast<double>(kRadicandOfMask[m]));
  return v;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw DivisionByZero("AlgNum: inverse of zero");
  // Multiply by conjugates one prime at a time until the norm is rational.
  AlgNum norm = *this;
  AlgNum cofactor = 1;
  for (unsigned bit = 0; bit < 3; ++bit) {
    AlgNum c = conjugate_in(norm, bit);
    cofactor *= c;
    norm *= c;
  }
  Rational n = norm.c_[0];
  for (auto& q : cofactor.c_) q /= n;
  return cofactor;
}

AlgNum AlgNum::apply(const GaloisMap& g) const {
  AlgNum out = *this;
  for (unsigned m = 1; m < kDim; ++m)
    if (g.sign_on_mask(m) < 0) out.c_[m] = -out.c_[m];
  return out;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  for (unsigned m = 0; m < kDim; ++m) c_[m] += o.c_[m];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  for (unsigned m = 0; m < kDim; ++m) c_[m] -= o.c_[m];
  return *this;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  AlgNum out;
  for (unsigned i = 0; i < AlgNum::kDim; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (unsigned j = 0; j < AlgNum::kDim; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      out.c_[i ^ j] += a.c_[i] * b.c_[j] * common_factor(i, j);
    }
  }
  return out;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) { return *this = *this * o; }

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  if (o.is_zero()) throw DivisionByZero("AlgNum: division by zero");
  if (o.is_rational()) {
    for (auto& q : c_) q /= o.c_[0];
    return *this;
  }
  return *this = *this * o.inverse();
}

AlgNum AlgNum::operator-() const {
  AlgNum out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational");
  std::string s(text);
  std::size_t slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(trim(num)) || !valid_int(trim(den)))
    throw ParseError("malformed rational '" + s + "'");
  std::string n(trim(num)), d(trim(den));
  if (n[0] == '+') n.erase(0, 1);
  if (d[0] == '+') d.erase(0, 1);
  Integer zn(n), zd(d);
  if (zd == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string AlgNum::str() const {
  static constexpr std::array<const char*, kDim> kNames{"", "r2", "r3", "r5", "r6", "r10", "r15", "r30"};
  std::string out;
  for (std::size_t i = 0; i < kDim; ++i) {
    const Rational& q = coord(i);
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (out.empty()) {
      if (sgn(q) < 0) out += "-";
    } else {
      out += sgn(q) < 0 ? " - " : " + ";
    }
    out += mag.get_str();
    if (i > 0) {
      out += "*";
      out += kNames[i];
    }
  }
  return out.empty() ? "0" : out;
}

AlgNum AlgNum::parse(std::string_view text) {
  std::string s(trim(text));
  if (s.empty()) throw ParseError("empty field element");
  AlgNum out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    int sgn_term = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn_term = s[pos] == '-' ? -1 : 1;
      ++pos;
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      // "+ -3" style: a second explicit sign on the coefficient.
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sgn_term = -sgn_term;
        ++pos;
      }
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms in '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term(trim(std::string_view(s).substr(pos, end - pos)));
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    Rational coef = 1;
    int radicand = 1;
    std::size_t r = term.find('r');
    if (r == std::string::npos) {
      coef = parse_rational(term);
    } else {
      std::string head(trim(std::string_view(term).substr(0, r)));
      std::string rad(trim(std::string_view(term).substr(r + 1)));
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before radical in '" + term + "'");
        head.pop_back();
        coef = parse_rational(head);
      }
      if (rad.empty()) throw ParseError("missing radicand in '" + term + "'");
      for (char c : rad)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("bad radicand in '" + term + "'");
      radicand = std::stoi(rad);
      if (mask_of_radicand(radicand) < 0 || radicand == 1)
        throw ParseError("unsupported radical r" + rad);
    }
    out.c_[static_cast<unsigned>(mask_of_radicand(radicand))] += sgn_term * coef;
    first = false;
    pos = end;
  }
  return out;
}

AlgNum cos_pi_over(int m) {
  switch (m) {
    case 2:
      return 0;
    case 3:
      return Rational(1, 2);
    case 4:
      return AlgNum::sqrt_of(2) * Rational(1, 2);
    case 5:
      return (AlgNum(1) + AlgNum::sqrt_of(5)) * Rational(1, 4);
    case 6:
      return AlgNum::sqrt_of(3) * Rational(1, 2);
    default:
      throw InvalidInput("cos_pi_over: label " + std::to_string(m) +
                         " unsupported; supported labels are {2, 3, 4, 5, 6}");
  }
}

}  // namespace vinwit
