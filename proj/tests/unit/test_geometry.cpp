#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "vinwit/error.hpp"
#include "vinwit/geometry.hpp"

using namespace vinwit;

namespace {

IntMatrix a_prime() {
  return IntMatrix::from_rows(
      {{2, -1, 0, 0, -1}, {-2, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {-1, 0, 0, -1, 2}});
}
CartanMatrix cartan() { return CartanMatrix::from_integer(a_prime()); }
std::vector<GroupElement> gens() { return reflection_generators(cartan()); }

// Orbit of projective classes by plain breadth-first search over words.
std::size_t brute_orbit_size(const std::vector<IntMatrix>& g, const IntVector& seed, std::size_t depth) {
  auto key = [](IntVector v) {
    Integer d = 0;
    for (const auto& x : v) mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
    std::size_t k = 0;
    while (v[k] == 0) ++k;
    if (v[k] < 0) d = -d;
    std::vector<std::string> s;
    for (auto& x : v) s.push_back(Integer(x / d).get_str());
    return s;
  };
  std::set<std::vector<std::string>> seen{key(seed)};
  std::vector<IntVector> frontier{seed};
  for (std::size_t l = 0; l < depth; ++l) {
    std::vector<IntVector> next;
    for (const auto& x : frontier)
      for (const auto& m : g) {
        IntVector y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < x.size(); ++j) y[i] += m(i, j) * x[j];
        if (seen.insert(key(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("negative-type seed") {
  auto s = negative_type_seed(cartan());
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(s.u[i] > 0);
    Integer au = 0;
    for (std::size_t k = 0; k < 5; ++k) au += a_prime()(i, k) * s.u[k];
    CHECK(au == s.image[i]);
    CHECK(au < 0);
  }
  CHECK_THROWS_AS(negative_type_seed(CartanMatrix::from_integer(IntMatrix::from_rows({{2, -1}, {-1, 2}}))),
                  InvalidInput);
  auto c = chamber_seed(cartan());
  for (std::size_t i = 0; i < 5; ++i) {
    Integer root = 0;
    for (std::size_t k = 0; k < 5; ++k) root += a_prime()(k, i) * c.u[k];
    CHECK(root < 0);
  }
}

TEST_CASE("vector helpers") {
  CHECK(primitive({4, -6, 0}) == IntVector{2, -3, 0});
  CHECK(projective_key({0, -4, 6}) == IntVector{0, 2, -3});
  CHECK(pairing({1, 2}, {3, 4}) == 11);
  CHECK(act_on(IntMatrix::from_rows({{0, 1}, {1, 0}}), {5, 7}) == IntVector{7, 5});
}

TEST_CASE("small orbits") {
  IntVector seed = negative_type_seed(cartan()).u;
  auto c0 = orbit(gens(), seed, 0);
  REQUIRE(c0.points.size() == 1);
  CHECK(c0.points[0] == primitive(seed));
  auto c1 = orbit(gens(), seed, 1);
  CHECK(c1.points.size() <= 6);
  std::vector<IntMatrix> g;
  for (const auto& e : gens()) g.push_back(e.matrix);
  CHECK(c1.points.size() == brute_orbit_size(g, seed, 1));
  auto w0 = properness_witness(c0);
  CHECK(w0.found);
  CHECK(revalidate_witness(c0, w0.w));
}

TEST_CASE("depth-6 orbit and half-space witness") {
  IntVector seed = negative_type_seed(cartan()).u;
  auto cloud = orbit(gens(), seed, 6);
  std::vector<IntMatrix> g;
  for (const auto& e : gens()) g.push_back(e.matrix);
  CHECK(cloud.points.size() == brute_orbit_size(g, seed, 6));
  CHECK_FALSE(cloud.truncated);
  CHECK_FALSE(cloud.antipodal_depth);
  CHECK(orbit_closed(cloud, gens()));
  for (std::size_t k = 0; k < cloud.points.size(); ++k)
    CHECK(projective_key(act_on(evaluate_word(gens(), cloud.words[k]).matrix, seed)) ==
          projective_key(cloud.points[k]));
  auto w = properness_witness(cloud);
  REQUIRE(w.found);
  CHECK(w.margin > 0);
  Integer least = pairing(w.w, cloud.points[0]);
  for (const auto& x : cloud.points) least = std::min(least, pairing(w.w, x));
  CHECK(least == w.margin);
  CHECK(least >= 1);
  CHECK(orbit(gens(), seed, 6).points == cloud.points);
  CHECK_FALSE(revalidate_witness(cloud, IntVector{1, -1, 0, 0, 0}));
}

TEST_CASE("orbit budget") {
  auto cloud = orbit(gens(), negative_type_seed(cartan()).u, 6, OrbitBudget{10, 50});
  CHECK(cloud.truncated);
}

TEST_CASE("non-convex toy has no witness") {
  auto toy = nonconvex_toy_generators();
  auto cloud = orbit(toy, {1, 0, 1, 0, 0}, 8);
  CHECK(cloud.antipodal_depth);
  CHECK_FALSE(properness_witness(cloud).found);
}

TEST_CASE("proximality") {
  SampleConfig one{1, 1, 1, std::nullopt, std::nullopt};
  auto id = limit_set_sample({{IntMatrix::identity(5), {0}}}, one);
  REQUIRE(id.size() == 1);
  CHECK_FALSE(id[0].proximal);
  auto refl = limit_set_sample({gens()[0]}, one);
  CHECK_FALSE(refl[0].proximal);

  SampleConfig cfg;
  cfg.chamber = chamber_seed(cartan()).u;
  auto pts = limit_set_sample(gens(), cfg);
  REQUIRE(pts.size() == 200);
  std::size_t prox = 0;
  for (const auto& p : pts) {
    prox += p.proximal;
    CHECK(p.word.size() == 40);
    double norm = std::sqrt(std::inner_product(p.x.begin(), p.x.end(), p.x.begin(), 0.0));
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(prox >= 180);
  auto again = limit_set_sample(gens(), cfg);
  CHECK(render(again).csv == render(pts).csv);
}

TEST_CASE("rendering") {
  auto empty = render({});
  CHECK(empty.svg.find("<svg") == 0);
  CHECK(empty.svg.find("<circle") == std::string::npos);
  CHECK(empty.csv == "x1,x2,x3,x4,x5,chart_u,chart_v,word,proximal\n");

  LimitPoint p;
  p.x = {0.5, 0.25, 0.125, 0.0625, 0.0625};
  p.word = {0, 2};
  p.proximal = true;
  auto one = render({p}, RenderOptions{IntVector{1, 1, 1, 1, 1}, 0, 1});
  CHECK(one.svg.find("<circle") != std::string::npos);
  CHECK(one.svg.find("<circle", one.svg.find("<circle") + 1) == std::string::npos);
  CHECK(one.csv.find("0.500000000,0.250000000,1 3,1") != std::string::npos);
  CHECK_THROWS_AS(render({p}, RenderOptions{std::nullopt, 1, 1}), InvalidInput);
}
