#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "vinwit/coset.hpp"
#include "vinwit/error.hpp"

using namespace vinwit;

namespace {

IntMatrix crystallographic(std::size_t n, bool type_b) {
  IntMatrix a = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
  if (type_b) a(1, 0) = -2;
  return a;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // first a, then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

// Canonical form of a transitive action up to relabelling: BFS labelling from
// every base point, keep the least resulting table.
std::vector<std::vector<int>> canonical_action(const std::vector<Perm>& gens) {
  std::size_t n = gens[0].size();
  std::vector<std::vector<int>> best;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<int> label(n, -1), order{static_cast<int>(start)};
    label[start] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (const auto& g : gens) {
        int y = g[static_cast<std::size_t>(order[k])];
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    if (order.size() != n) return {};  // not transitive
    std::vector<std::vector<int>> table;
    for (const auto& g : gens) {
      std::vector<int> row(n);
      for (std::size_t x = 0; x < n; ++x) row[static_cast<std::size_t>(label[x])] = label[static_cast<std::size_t>(g[x])];
      table.push_back(row);
    }
    if (best.empty() || table < best) best = table;
  }
  return best;
}

// Conjugacy classes of index-n subgroups = transitive actions on n points up to isomorphism.
std::size_t count_actions(std::size_t n, std::size_t ngens, const std::function<bool(const std::vector<Perm>&)>& ok) {
  std::vector<Perm> all;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::vector<std::vector<int>>> classes;
  std::vector<Perm> pick(ngens);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == ngens) {
      if (!ok(pick)) return;
      auto c = canonical_action(pick);
      if (!c.empty()) classes.insert(c);
      return;
    }
    for (const auto& q : all) {
      pick[k] = q;
      rec(k + 1);
    }
  };
  rec(0);
  return classes.size();
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::size_t group_order_by_tc(const CoxeterDiagram& d) {
  auto res = todd_coxeter(coxeter_presentation(d), {});
  REQUIRE(res.status == EnumerationStatus::complete);
  REQUIRE(res.table->valid_for(coxeter_presentation(d)));
  return res.table->index();
}

}  // namespace

TEST_CASE("presentations") {
  auto p = coxeter_presentation(pentagon_diagram());
  CHECK(p.generators() == 5);
  CHECK(p.relators().size() == 15);
  CHECK(p.all_involutions());
  auto one = coxeter_presentation(CoxeterDiagram(1));
  CHECK(one.relators() == std::vector<FreeWord>{{1, 1}});
  auto a2 = coxeter_presentation(path_diagram({3}));
  CHECK(a2.relators() == std::vector<FreeWord>{{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CHECK(free_reduce({1, 2, -2, -1, 3}) == FreeWord{3});
  CHECK(a2.reduce({1, -1, 2, -2, 2}) == FreeWord{2});
}

TEST_CASE("Todd-Coxeter on finite Coxeter groups") {
  CHECK(group_order_by_tc(path_diagram({3})) == 6);
  CHECK(group_order_by_tc(path_diagram({4})) == 8);
  CHECK(group_order_by_tc(path_diagram({3, 3})) == 24);
  CHECK(group_order_by_tc(path_diagram({4, 3, 3})) == 384);
  CHECK(oracle::closure_order(oracle::reflections(crystallographic(2, false))) == 6);
  CHECK(oracle::closure_order(oracle::reflections(crystallographic(2, true))) == 8);
  CHECK(oracle::closure_order(oracle::reflections(crystallographic(3, false))) == 24);
  CHECK(oracle::closure_order(oracle::reflections(crystallographic(4, true))) == 384);
}

TEST_CASE("Todd-Coxeter with subgroup generators") {
  auto p = coxeter_presentation(pentagon_diagram());
  std::vector<FreeWord> pairs;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) pairs.push_back({i, j});
  auto res = todd_coxeter(p, pairs);
  REQUIRE(res.status == EnumerationStatus::complete);
  CHECK(res.table->index() == 2);
  for (const auto& w : pairs) CHECK(res.table->act(0, w) == 0);
  // Dihedral parabolic <s1, s2> of order 8 in B4 has index 48.
  auto b4 = todd_coxeter(coxeter_presentation(path_diagram({4, 3, 3})), {{1}, {2}});
  CHECK(b4.table->index() == 48);
}

TEST_CASE("coset enumeration respects its budget") {
  auto res = todd_coxeter(coxeter_presentation(path_diagram({4, 3, 3})), {}, 100);
  CHECK(res.status == EnumerationStatus::resource_limit);
  CHECK_FALSE(res.table);
}

TEST_CASE("coset tables") {
  CosetTable t({{1, 0, 2}, {0, 2, 1}});
  CHECK(t.index() == 3);
  CHECK(t.act(0, 1) == 1);
  CHECK(t.act(1, -2) == 2);
  CHECK(t.act(0, FreeWord{1, 2}) == 2);
  CHECK_THROWS_AS(CosetTable({{0, 0, 1}}), InvalidInput);
  auto reps = coset_representatives(t, free_group_presentation(2));
  for (std::size_t c = 0; c < reps.size(); ++c) CHECK(t.act(0, reps[c]) == static_cast<int>(c));
}

TEST_CASE("low-index subgroups of S3") {
  auto p = coxeter_presentation(path_diagram({3}));
  auto res = low_index_subgroups(p, 6);
  CHECK(res.status == EnumerationStatus::complete);
  std::vector<std::size_t> idx;
  for (const auto& t : res.tables) {
    idx.push_back(t.index());
    CHECK(t.valid_for(p));
  }
  CHECK(idx == std::vector<std::size_t>{1, 2, 3, 6});
  auto brute = [&](std::size_t n) {
    return count_actions(n, 2, [](const std::vector<Perm>& g) {
      return is_identity(compose(g[0], g[0])) && is_identity(compose(g[1], g[1])) &&
             is_identity(compose(compose(compose(g[0], g[1]), compose(g[0], g[1])), compose(g[0], g[1])));
    });
  };
  CHECK(brute(1) + brute(2) + brute(3) + brute(4) + brute(5) + brute(6) == 4);
}

TEST_CASE("low-index subgroups of the free group of rank 2") {
  auto p = free_group_presentation(2);
  auto res = low_index_subgroups(p, 4);
  std::map<std::size_t, std::size_t> per_index;
  for (const auto& t : res.tables) ++per_index[t.index()];
  auto any = [](const std::vector<Perm>&) { return true; };
  for (std::size_t n = 1; n <= 4; ++n) CHECK(per_index[n] == count_actions(n, 2, any));
  CHECK(res.tables.size() == 37);
}

TEST_CASE("low-index edge cases") {
  auto p = coxeter_presentation(pentagon_diagram());
  auto one = low_index_subgroups(p, 1);
  REQUIRE(one.tables.size() == 1);
  CHECK(one.tables[0].index() == 1);
  // W(Σ)^ab = Z/2 has exactly one surjection onto Z/2.
  CHECK(low_index_subgroups(p, 2).tables.size() == 2);
  auto starved = low_index_subgroups(p, 12, 10);
  CHECK(starved.status == EnumerationStatus::resource_limit);
}
