#include "vinwit/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "vinwit/lp.hpp"

namespace vinwit {

IntVector act_on(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw InvalidInput("act_on: dimension mismatch");
  IntVector out(m.rows(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw InvalidInput("primitive: zero vector");
  IntVector out = v;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector projective_key(const IntVector& v) {
  IntVector out = primitive(v);
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0)
    for (auto& x : out) x = -x;
  return out;
}

Integer pairing(const IntVector& w, const IntVector& x) {
  if (w.size() != x.size()) throw InvalidInput("pairing: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

namespace {

IntVector integer_multiple(const std::vector<AlgNum>& u) {
  Integer l = 1;
  std::vector<Rational> q;
  for (const auto& x : u) {
    if (!x.is_rational()) throw InvalidInput("negative_type_seed: irrational witness");
    q.push_back(x.rational_part());
    l = lcm(l, q.back().get_den());
  }
  IntVector out;
  for (const auto& x : q) out.push_back(Integer(x * l));
  return primitive(out);
}

Matrix<double> scaled_double(const IntMatrix& m) {
  long top = LONG_MIN;
  for (const auto& x : m.data())
    if (x != 0) top = std::max(top, static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)));
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      long e = 0;
      double d = mpz_get_d_2exp(&e, m(i, j).get_mpz_t());
      out(i, j) = top == LONG_MIN ? 0.0 : std::ldexp(d, static_cast<int>(e - top));
    }
  return out;
}

}  // namespace

SeedVector negative_type_seed(const CartanMatrix& a) {
  if (!a.is_integral()) throw InvalidInput("negative_type_seed: Cartan matrix must be integral");
  auto ct = cartan_type(a);
  if (ct.type != CartanType::negative)
    throw InvalidInput(std::string("negative_type_seed: matrix is of ") + to_string(ct.type) + " type");
  SeedVector s;
  s.u = integer_multiple(ct.witness);
  s.image = act_on(a.to_integer(), s.u);
  for (const auto& x : s.image)
    if (x >= 0) throw Error("negative_type_seed: internal error, A u is not negative");
  return s;
}

SeedVector chamber_seed(const CartanMatrix& a) {
  CartanMatrix t{a.entries.transpose(), a.kind};
  return negative_type_seed(t);
}

OrbitCloud orbit(const std::vector<GroupElement>& gens, const IntVector& seed, std::size_t depth,
                 const OrbitBudget& budget) {
  if (depth > budget.max_depth)
    throw InvalidInput("orbit: depth " + std::to_string(depth) + " exceeds ceiling " +
                       std::to_string(budget.max_depth));
  OrbitCloud cloud;
  cloud.depth = depth;
  std::map<IntVector, std::size_t> index;
  IntVector s = primitive(seed);
  index.emplace(projective_key(s), 0);
  cloud.points.push_back(s);
  cloud.depth_of.push_back(0);
  cloud.words.emplace_back();
  std::size_t begin = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::size_t end = cloud.points.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        IntVector y = primitive(act_on(gens[g].matrix, cloud.points[i]));
        auto [it, fresh] = index.emplace(projective_key(y), cloud.points.size());
        if (!fresh) {
          if (!cloud.antipodal_depth && cloud.points[it->second] != y) cloud.antipodal_depth = d;
          continue;
        }
        if (cloud.points.size() >= budget.max_points) {
          cloud.truncated = true;
          index.erase(it);
          return cloud;
        }
        cloud.points.push_back(std::move(y));
        cloud.depth_of.push_back(d);
        Word w = cloud.words[i];
        w.insert(w.begin(), static_cast<int>(g));
        cloud.words.push_back(std::move(w));
      }
    begin = end;
  }
  return cloud;
}

bool orbit_closed(const OrbitCloud& cloud, const std::vector<GroupElement>& gens) {
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) index.emplace(projective_key(cloud.points[i]), i);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (cloud.depth_of[i] >= cloud.depth) continue;
    for (const auto& g : gens)
      if (!index.count(projective_key(act_on(g.matrix, cloud.points[i])))) return false;
  }
  return true;
}

namespace {

struct HalfSpace {
  bool found = false;
  IntVector w;
  Integer margin = 0;
  std::size_t rounds = 0;
};

// Maximise t subject to <p - 1, x> >= t for x in the cloud, 0 <= p <= 2, by
// constraint generation over the points with depth <= max_depth.
HalfSpace find_half_space(const OrbitCloud& cloud, std::size_t max_depth) {
  HalfSpace hs;
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    if (cloud.depth_of[i] <= max_depth) pool.push_back(i);
  if (pool.empty()) return hs;
  std::size_t n = cloud.points[0].size();
  std::vector<std::size_t> active;
  for (std::size_t i : pool)
    if (cloud.depth_of[i] <= 1) active.push_back(i);

  for (;;) {
    ++hs.rounds;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i : active) {
      const auto& x = cloud.points[i];
      std::vector<Rational> row(n + 1);
      Rational sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = -Rational(x[j]);
        sum += x[j];
      }
      row[n] = 1;
      a.push_back(std::move(row));
      b.push_back(-sum);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(n + 1);
      row[j] = 1;
      a.push_back(std::move(row));
      b.push_back(2);
    }
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    auto res = maximize(a, b, c);
    if (res.status != LpStatus::optimal) throw Error("properness_witness: internal error, LP not optimal");
    Rational t = res.value;
    if (t <= 0) return hs;

    std::vector<Rational> w(n);
    Integer den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = res.x[j] - 1;
      den = lcm(den, w[j].get_den());
    }
    IntVector wi(n);
    for (std::size_t j = 0; j < n; ++j) wi[j] = Integer(w[j] * den);
    wi = primitive(wi);

    // Recheck every point of the pool; add the worst offenders.
    std::vector<std::pair<Integer, std::size_t>> bad;
    Integer margin = 0;
    bool first = true;
    for (std::size_t i : pool) {
      Integer p = pairing(wi, cloud.points[i]);
      if (first || p < margin) margin = p;
      first = false;
      if (p <= 0) bad.emplace_back(p, i);
    }
    if (bad.empty()) {
      hs.found = true;
      hs.w = std::move(wi);
      hs.margin = margin;
      return hs;
    }
    std::sort(bad.begin(), bad.end());
    for (std::size_t k = 0; k < bad.size() && k < 32; ++k) active.push_back(bad[k].second);
  }
}

}  // namespace

ProperWitness properness_witness(const OrbitCloud& cloud) {
  ProperWitness pw;
  if (cloud.points.empty()) return pw;
  if (cloud.antipodal_depth) {
    pw.violating_depth = *cloud.antipodal_depth;
    return pw;
  }
  HalfSpace hs = find_half_space(cloud, cloud.depth);
  pw.lp_rounds = hs.rounds;
  if (hs.found) {
    pw.found = true;
    pw.w = hs.w;
    pw.margin = hs.margin;
    return pw;
  }
  for (std::size_t d = 0; d <= cloud.depth; ++d) {
    HalfSpace sub = find_half_space(cloud, d);
    pw.lp_rounds += sub.rounds;
    if (!sub.found) {
      pw.violating_depth = d;
      break;
    }
  }
  return pw;
}

bool revalidate_witness(const OrbitCloud& cloud, const IntVector& w) {
  for (const auto& x : cloud.points)
    if (pairing(w, x) < 1) return false;
  return true;
}

std::vector<GroupElement> nonconvex_toy_generators() {
  IntMatrix g = IntMatrix::identity(5);
  g(0, 0) = 2;
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(1, 1) = 1;
  IntMatrix h = g.map([](const Integer& x) { return Integer(-x); });
  return {GroupElement{g, {0}}, GroupElement{h, {1}}};
}

namespace {

// For reflections g = I - v a^T, the functional a oriented negative on the chamber point.
std::vector<IntVector> simple_roots(const std::vector<GroupElement>& gens, const IntVector& chamber) {
  std::vector<IntVector> roots;
  for (const auto& g : gens) {
    IntMatrix d = IntMatrix::identity(g.matrix.rows()) - g.matrix;
    IntVector row;
    for (std::size_t r = 0; r < d.rows() && row.empty(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d(r, c) != 0) {
          for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(d(r, j));
          break;
        }
    if (row.empty()) throw InvalidInput("limit_set_sample: identity generator is not a reflection");
    // rank one: every row is a multiple of `row`
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t a = 0; a < d.cols(); ++a)
        for (std::size_t b = 0; b < d.cols(); ++b)
          if (d(r, a) * row[b] != d(r, b) * row[a])
            throw InvalidInput("limit_set_sample: generator is not a reflection");
    row = primitive(row);
    Integer p = pairing(row, chamber);
    if (p == 0) throw InvalidInput("limit_set_sample: chamber point lies on a mirror");
    if (p > 0)
      for (auto& x : row) x = -x;
    roots.push_back(std::move(row));
  }
  return roots;
}

}  // namespace

std::vector<LimitPoint> limit_set_sample(const std::vector<GroupElement>& gens, const SampleConfig& cfg) {
  if (gens.empty()) throw InvalidInput("limit_set_sample: no generators");
  std::size_t n = gens[0].matrix.rows(), k = gens.size();
  std::vector<bool> involution;
  for (const auto& g : gens) involution.push_back((g.matrix * g.matrix).is_identity());
  bool all_involutions = std::all_of(involution.begin(), involution.end(), [](bool b) { return b; });
  if (k == 1 && all_involutions && cfg.word_length > 1)
    throw InvalidInput("limit_set_sample: a single involution admits no reduced word of length > 1");

  std::vector<IntVector> roots;
  if (cfg.chamber) roots = simple_roots(gens, *cfg.chamber);

  std::mt19937_64 rng(cfg.seed);
  std::vector<LimitPoint> out;
  for (std::size_t s = 0; s < cfg.count; ++s) {
    LimitPoint pt;
    IntMatrix m = IntMatrix::identity(n);
    IntVector y;  // w^-1 applied to the chamber point
    if (cfg.chamber) y = *cfg.chamber;
    for (std::size_t l = 0; l < cfg.word_length; ++l) {
      int g;
      if (cfg.chamber) {
        std::vector<int> allowed;
        for (std::size_t i = 0; i < k; ++i)
          if (pairing(roots[i], y) < 0) allowed.push_back(static_cast<int>(i));
        if (allowed.empty()) throw Error("limit_set_sample: no length-increasing generator (finite group?)");
        g = allowed[rng() % allowed.size()];
        y = primitive(act_on(gens[static_cast<std::size_t>(g)].matrix, y));
      } else {
        do {
          g = static_cast<int>(rng() % k);
        } while (!pt.word.empty() && g == pt.word.back() && involution[static_cast<std::size_t>(g)]);
      }
      pt.word.push_back(g);
      m = m * gens[static_cast<std::size_t>(g)].matrix;
    }
    Matrix<double> md = scaled_double(m);

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i);
    auto normalize = [](std::vector<double>& x) {
      double norm = 0;
      for (double y : x) norm += y * y;
      norm = std::sqrt(norm);
      if (norm == 0) return false;
      for (double& y : x) y /= norm;
      return true;
    };
    normalize(v);
    for (pt.iterations = 0; pt.iterations < 10000; ++pt.iterations) {
      std::vector<double> next(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next[i] += md(i, j) * v[j];
      if (!normalize(next)) break;
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += next[i] * v[i];
      if (dot < 0)
        for (double& y : next) y = -y;
      double change = 0;
      for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::fabs(next[i] - v[i]));
      v = std::move(next);
      if (change < 1e-12) {
        pt.converged = true;
        ++pt.iterations;
        break;
      }
    }

    Eigen::MatrixXd em(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) em(static_cast<long>(i), static_cast<long>(j)) = md(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> es(em, false);
    std::vector<double> mags;
    for (long i = 0; i < es.eigenvalues().size(); ++i) mags.push_back(std::abs(es.eigenvalues()[i]));
    std::sort(mags.rbegin(), mags.rend());
    pt.gap_ratio = mags.size() < 2 ? 1.0 : (mags[1] == 0 ? INFINITY : mags[0] / mags[1]);
    pt.proximal = pt.gap_ratio > 1.0 + 1e-6;

    if (cfg.chart) {
      double p = 0;
      for (std::size_t i = 0; i < n; ++i) p += (*cfg.chart)[i].get_d() * v[i];
      if (p < 0)
        for (double& y : v) y = -y;
    }
    pt.x = std::move(v);
    out.push_back(std::move(pt));
  }
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s = buf;
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

}  // namespace

RenderResult render(const std::vector<LimitPoint>& points, const RenderOptions& opt) {
  RenderResult r;
  std::size_t n = points.empty() ? 5 : points[0].x.size();
  if (opt.axis_u >= n || opt.axis_v >= n || opt.axis_u == opt.axis_v)
    throw InvalidInput("render: chart axes must be two distinct coordinates in 0.." + std::to_string(n - 1));
  std::vector<double> w(n, 1.0);
  if (opt.chart) {
    if (opt.chart->size() != n) throw InvalidInput("render: chart functional has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) w[i] = (*opt.chart)[i].get_d();
  }

  std::vector<double> us, vs;
  std::vector<bool> ok;
  for (const auto& p : points) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * p.x[i];
    bool good = std::fabs(s) > 1e-300;
    ok.push_back(good);
    us.push_back(good ? p.x[opt.axis_u] / s : 0.0);
    vs.push_back(good ? p.x[opt.axis_v] / s : 0.0);
  }
  if (std::count(ok.begin(), ok.end(), false) > 0)
    r.warnings.push_back("points on the chart's line at infinity were placed at the origin");

  r.csv = "";
  for (std::size_t i = 1; i <= n; ++i) r.csv += "x" + std::to_string(i) + ",";
  r.csv += "chart_u,chart_v,word,proximal\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (double x : points[k].x) r.csv += fmt(x) + ",";
    r.csv += fmt(us[k]) + "," + fmt(vs[k]) + ",";
    for (std::size_t l = 0; l < points[k].word.size(); ++l)
      r.csv += (l ? " " : "") + std::to_string(points[k].word[l] + 1);
    r.csv += points[k].proximal ? ",1\n" : ",0\n";
  }

  double umin = 0, umax = 0, vmin = 0, vmax = 0;
  if (!points.empty()) {
    umin = *std::min_element(us.begin(), us.end());
    umax = *std::max_element(us.begin(), us.end());
    vmin = *std::min_element(vs.begin(), vs.end());
    vmax = *std::max_element(vs.begin(), vs.end());
  }
  // Degeneracy: the centred points have (numerically) rank < 2.
  if (points.size() >= 2) {
    double mu = 0, mv = 0;
    for (std::size_t k = 0; k < us.size(); ++k) {
      mu += us[k];
      mv += vs[k];
    }
    mu /= static_cast<double>(us.size());
    mv /= static_cast<double>(vs.size());
    double suu = 0, svv = 0, suv = 0;
    for (std::size_t k = 0; k < us.size(); ++k) {
      suu += (us[k] - mu) * (us[k] - mu);
      svv += (vs[k] - mv) * (vs[k] - mv);
      suv += (us[k] - mu) * (vs[k] - mv);
    }
    double det = suu * svv - suv * suv, tr = suu + svv;
    if (tr == 0 || det <= 1e-12 * tr * tr) r.warnings.push_back("degenerate chart: points project onto a line");
  }

  const double size = 1000, pad = 50;
  double span = std::max({umax - umin, vmax - vmin, 1e-12});
  r.svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    double cx = pad + (us[k] - umin) / span * (size - 2 * pad);
    double cy = size - pad - (vs[k] - vmin) / span * (size - 2 * pad);
    if (points.size() == 1) cx = cy = size / 2;
    char buf[128];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"2\"/>\n", cx, cy);
    r.svg += buf;
  }
  r.svg += "</svg>\n";
  return r;
}

}  // namespace vinwit
