#include "vinwit/polynomial.hpp"

#include <algorithm>

#include "vinwit/error.hpp"

namespace vinwit {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::coeff(std::size_t k) const {
  static const Integer zero = 0;
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(d));
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool show = mag != 1 || k == 0;
    if (show) out += mag.get_str();
    if (k > 0) {
      if (show) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

bool divide_by_monic(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& quotient, IntPolynomial& remainder) {
  if (!b.is_monic()) return false;
  std::vector<Integer> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) {
    quotient = {};
    remainder = a;
    return true;
  }
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  quotient = IntPolynomial(std::move(q));
  remainder = IntPolynomial(std::move(r));
  return true;
}

bool squarefree_over_q(const IntPolynomial& f) {
  if (f.degree() <= 0) return true;
  using QPoly = std::vector<Rational>;
  auto trim = [](QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  QPoly a, b;
  for (const auto& c : f.coeffs()) a.emplace_back(c);
  IntPolynomial df = f.derivative();
  for (const auto& c : df.coeffs()) b.emplace_back(c);
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f2 = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f2 * b[j];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

namespace modp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPolynomial& f, std::uint64_t p) {
  Poly out;
  Integer mp = static_cast<unsigned long>(p);
  for (const auto& c : f.coeffs()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mp.get_mpz_t());
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = (x + p - y) % p;
  }
  trim(c);
  return c;
}

namespace {

void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero mod p");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  std::uint64_t inv = inverse(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    std::uint64_t c = r.back() * inv % p;
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = (r[shift + j] + p - c * b[j] % p) % p;
    trim(r);
  }
  trim(q);
}

}  // namespace

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly div(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return q;
}

Poly make_monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = inverse(a.back(), p);
  Poly out = a;
  for (auto& c : out) c = c * inv % p;
  return out;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  Poly d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * (k % p) % p);
  trim(d);
  return d;
}

Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = mod(base, m, p);
  while (exp) {
    if (exp & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    exp >>= 1;
  }
  return mod(result, m, p);
}

namespace {

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

// c(x) = d(x^p) -> d(x); valid because a^p = a in F_p.
Poly pth_root(const Poly& c, std::uint64_t p) {
  Poly out;
  for (std::size_t k = 0; k < c.size(); k += p) out.push_back(c[k]);
  trim(out);
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f_in, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = make_monic(f_in, p);
  if (f.size() <= 1) return out;
  Poly g = derivative(f, p);
  if (g.empty()) {
    for (auto& [fac, mult] : squarefree_decomposition(pth_root(f, p), p))
      out.emplace_back(fac, mult * static_cast<int>(p));
    return out;
  }
  Poly c = gcd(f, g, p);
  Poly w = div(f, c, p);
  int i = 1;
  while (!is_one(w)) {
    Poly y = gcd(w, c, p);
    Poly fac = div(w, y, p);
    if (!is_one(fac)) out.emplace_back(make_monic(fac, p), i);
    ++i;
    w = y;
    c = div(c, y, p);
  }
  if (!is_one(c))
    for (auto& [fac, mult] : squarefree_decomposition(pth_root(c, p), p))
      out.emplace_back(fac, mult * static_cast<int>(p));
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = make_monic(f_in, p);
  Poly h{0, 1};  // x
  int d = 1;
  while (f.size() >= static_cast<std::size_t>(2 * d + 1)) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, Poly{0, 1}, p), p);
    if (!is_one(g)) {
      out.emplace_back(g, d);
      f = div(f, g, p);
      h = mod(h, f, p);
    }
    ++d;
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

}  // namespace modp

}  // namespace vinwit
