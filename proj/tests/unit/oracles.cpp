#include "oracles.hpp"

#include <Eigen/Dense>
#include <map>
#include <numeric>

namespace oracle {

mpf_class decimal(const AlgNum& a, unsigned bits) {
  static const int radicands[8] = {1, 2, 3, 5, 6, 10, 15, 30};
  mpf_class sum(0, bits);
  for (std::size_t i = 0; i < 8; ++i) {
    mpf_class r(radicands[i], bits), q(a.coord(i), bits);
    sum += q * sqrt(r);
  }
  return sum;
}

int decimal_sign(const AlgNum& a, unsigned bits) {
  if (a.is_zero()) return 0;
  return sgn(decimal(a, bits));
}

std::array<std::size_t, 3> float_signature(const AlgMatrix& m, double tol) {
  std::size_t n = m.rows();
  Eigen::MatrixXd d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = decimal(m(i, j), 200).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
  std::array<std::size_t, 3> out{0, 0, 0};
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double l = es.eigenvalues()(i);
    ++out[l > tol ? 0 : l < -tol ? 2 : 1];
  }
  return out;
}

Integer laplace_det(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Integer term = m(0, c) * laplace_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

int matrix_order(const IntMatrix& m, int cap) {
  IntMatrix p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

std::size_t closure_order(const std::vector<IntMatrix>& gens, std::size_t cap) {
  auto key = [](const IntMatrix& m) {
    std::vector<std::string> k;
    for (const auto& x : m.data()) k.push_back(x.get_str());
    return k;
  };
  std::size_t n = gens.at(0).rows();
  std::set<std::vector<std::string>> seen{key(IntMatrix::identity(n))};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        IntMatrix y = x * g;
        if (seen.insert(key(y)).second) {
          if (seen.size() > cap) return 0;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Integer> determinant_divisor_factors(const IntMatrix& m) {
  std::vector<Integer> d{1};
  std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        Integer det = laplace_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

std::vector<IntMatrix> reflections(const IntMatrix& a) {
  std::size_t n = a.rows();
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix r(n, n);
    // column j of rho(s_i) is s_i(e_j) = e_j - A_ji e_i
    for (std::size_t j = 0; j < n; ++j) {
      r(j, j) += 1;
      r(i, j) -= a(j, i);
    }
    out.push_back(r);
  }
  return out;
}

AlgNum random_alg(std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span), use(0, 2);
  std::array<vinwit::Rational, 8> c;
  for (auto& x : c) {
    if (use(rng) == 0) continue;
    x = vinwit::Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return AlgNum::from_coords(c);
}

}  // namespace oracle
