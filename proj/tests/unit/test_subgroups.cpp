#include <doctest.h>

#include "oracles.hpp"
#include "vinwit/error.hpp"
#include "vinwit/smith.hpp"
#include "vinwit/subgroups.hpp"

using namespace vinwit;

namespace {

CosetTable whole(std::size_t gens) { return CosetTable(std::vector<std::vector<int>>(gens, std::vector<int>{0})); }

CosetTable parity_table(std::size_t gens) { return CosetTable(std::vector<std::vector<int>>(gens, std::vector<int>{1, 0})); }

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Smith normal form") {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.diagonal_form);
  CHECK((s.u * s.u_inv).is_identity());
  CHECK((s.v * s.v_inv).is_identity());
  CHECK(s.diagonal() == oracle::determinant_divisor_factors(m));
  CHECK(s.diagonal() == ints({2, 6, 12}));
  CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);
}

TEST_CASE("abelianization") {
  auto w = abelianization(coxeter_presentation(pentagon_diagram()));
  CHECK(w.invariant_factors == ints({2}));
  CHECK(w.betti == 0);
  CHECK(abelianization(free_group_presentation(2)).betti == 2);
  Presentation d4(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}});
  auto a = abelianization(d4);
  CHECK(a.invariant_factors == ints({2, 2}));
  CHECK(a.betti == 0);
  CHECK(relator_matrix(d4) == IntMatrix::from_rows({{2, 0}, {0, 2}, {4, 4}}));
}

TEST_CASE("Reidemeister-Schreier") {
  auto p = coxeter_presentation(pentagon_diagram());
  auto full = reidemeister_schreier(p, whole(5));
  CHECK(full.presentation.generators() == 5);
  CHECK(abelianization(full.presentation).invariant_factors == ints({2}));

  auto a2 = coxeter_presentation(path_diagram({3}));
  auto rot = reidemeister_schreier(a2, parity_table(2));
  auto ab = abelianization(rot.presentation);
  CHECK(ab.invariant_factors == ints({3}));
  CHECK(ab.betti == 0);

  auto even = reidemeister_schreier(p, parity_table(5));
  CHECK(abelianization(even.presentation).betti == 0);
  for (const auto& w : even.generator_words) CHECK(parity_table(5).act(0, w) == 0);
  CHECK_THROWS_AS(rewrite(even, parity_table(5), p, {1}), InvalidInput);
  CHECK_FALSE(rewrite(even, parity_table(5), p, {1, 2}).empty());
}

TEST_CASE("Nielsen-Schreier rank of free subgroups") {
  for (std::size_t r : {2, 3}) {
    auto p = free_group_presentation(r);
    auto res = low_index_subgroups(p, r == 2 ? 4 : 3);
    for (const auto& t : res.tables) {
      auto sub = reidemeister_schreier(p, t);
      CHECK(abelianization(sub.presentation).betti == t.index() * (r - 1) + 1);
    }
  }
}

TEST_CASE("torsion") {
  auto d = pentagon_diagram();
  auto p = coxeter_presentation(d);
  CHECK_FALSE(is_torsion_free(whole(5), d, p));
  auto rep = torsion_report(parity_table(5), d, p);
  CHECK_FALSE(rep.torsion_free);
  REQUIRE(rep.element);
  CHECK(rep.element->size() % 2 == 0);
  std::vector<std::size_t> orders;
  for (const auto& [v, o] : rep.parabolic_orders) orders.push_back(o);
  CHECK(orders == std::vector<std::size_t>{120, 120, 384, 1152, 384});

  auto b4 = path_diagram({4, 3, 3});
  auto pb = coxeter_presentation(b4);
  auto regular = todd_coxeter(pb, {});
  CHECK(is_torsion_free(*regular.table, b4, pb));
  // Affine triangle plus a commuting vertex: dropping that vertex leaves an infinite parabolic.
  CoxeterDiagram affine(4);
  affine.set_label(0, 1, 3);
  affine.set_label(1, 2, 3);
  affine.set_label(0, 2, 3);
  CHECK_THROWS_AS(torsion_report(whole(4), affine, coxeter_presentation(affine)), InvalidInput);
}

TEST_CASE("orientation") {
  auto p = coxeter_presentation(pentagon_diagram());
  CHECK(orientation_preserving(parity_table(5), p));
  CHECK_FALSE(orientation_preserving(whole(5), p));
}

TEST_CASE("maps onto Z") {
  auto f2 = maps_to_Z(free_group_presentation(2));
  REQUIRE(f2.size() == 2);
  IntMatrix m = IntMatrix::from_rows({f2[0].images, f2[1].images});
  CHECK(abs(oracle::laplace_det(m)) == 1);
  CHECK(maps_to_Z(coxeter_presentation(pentagon_diagram())).empty());
}

TEST_CASE("kernel sampling in a free group") {
  auto p = free_group_presentation(2);
  CosetTable t({{1, 2, 0}, {0, 2, 1}});
  auto sub = reidemeister_schreier(p, t);
  CHECK(sub.presentation.generators() == 4);
  auto maps = maps_to_Z(sub.presentation);
  REQUIRE(maps.size() == 4);
  for (int radius : {0, 1, 2}) {
    auto words = kernel_sample(sub, t, p, maps[0], radius);
    CHECK_FALSE(words.empty());
    for (const auto& w : words) {
      CHECK(t.act(0, w) == 0);
      CHECK(phi_value(sub, t, p, maps[0], w) == 0);
    }
  }
  // Radius 0 returns exactly the phi-zero subgroup generators.
  std::size_t zeros = 0;
  for (const auto& img : maps[0].images) zeros += img == 0;
  CHECK(kernel_sample(sub, t, p, maps[0], 0).size() == zeros);
  CHECK_THROWS_AS(kernel_sample(sub, t, p, maps[0], -1), InvalidInput);
}
