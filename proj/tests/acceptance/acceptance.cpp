// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "vinwit/coset.hpp"
#include "vinwit/coxeter.hpp"
#include "vinwit/geometry.hpp"
#include "vinwit/pipeline.hpp"
#include "vinwit/subgroups.hpp"
#include "vinwit/vinberg.hpp"
#include "vinwit/zariski.hpp"

using namespace vinwit;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && dt >= limit_s) {
    c.ok = false;
    c.detail = "over time limit";
  }
  if (!c.ok) ++failures;
  std::printf("%s %2d %-34s %9.3f s (limit %g s)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, dt, limit_s,
              c.detail.empty() ? "" : "  ", c.detail.c_str());
  std::fflush(stdout);
}

IntMatrix a_prime() { return default_integer_cartan(); }
std::vector<GroupElement> rho() { return reflection_generators(CartanMatrix::from_integer(a_prime())); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const CoxeterDiagram sigma = pentagon_diagram();
  const AlgNum r2 = AlgNum::sqrt_of(2);

  criterion(1, "Cartan reconstruction", 1, [&](Check& c) {
    AlgMatrix shown = AlgMatrix::from_rows({{2, -r2, 0, 0, -1},
                                            {-r2, 2, -1, 0, 0},
                                            {0, -1, 2, -1, 0},
                                            {0, 0, -1, 2, -1},
                                            {-1, 0, 0, -1, 2}});
    AlgMatrix a = cartan_from_diagram(sigma).entries;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        c.require(a(i, j) == shown(i, j), "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  });

  criterion(2, "signature and Galois conjugate", 1, [&](Check& c) {
    AlgMatrix a = cartan_from_diagram(sigma).entries;
    GaloisMap s{{-1, 1, 1}};
    AlgMatrix conj = a.map([&](const AlgNum& x) { return x.apply(s); });
    c.require(signature(a) == SignatureReport{4, 0, 1}, "signature(A)");
    c.require(signature(conj) == SignatureReport{5, 0, 0}, "signature(sigma(A))");
  });

  criterion(3, "subdiagram ellipticity", 1, [&](Check& c) {
    auto classes = classify_subdiagrams(sigma);
    c.require(classes.size() == 30, std::to_string(classes.size()) + " subdiagrams");
    for (const auto& k : classes) c.require(k.elliptic, "non-elliptic subdiagram");
  });

  criterion(4, "Lanner reproduction", 60, [&](Check& c) {
    auto five = enumerate_lanner(5);
    c.require(five.size() == 5, std::to_string(five.size()) + " classes of rank 5");
    bool has_sigma = false;
    for (const auto& d : five) has_sigma = has_sigma || d.isomorphic(sigma);
    c.require(has_sigma, "pentagon diagram missing");
    auto kept = integrality_filter(five);
    c.require(kept.size() == 1 && kept[0].isomorphic(sigma), "integrality filter");
    c.require(enumerate_lanner(6).empty(), "rank 6 nonempty");
  });

  criterion(5, "representation integrity", 1, [&](Check& c) {
    auto g = rho();
    for (const auto& e : g) {
      c.require((e.matrix * e.matrix).is_identity(), "not involutive");
      c.require(determinant(e.matrix) == -1, "determinant");
    }
    auto rel = verify_relations(g, sigma, 50);
    c.require(rel.all_pass && rel.pairs.size() == 10, "relations");
    // Cycle edges first, then the commuting pairs.
    const std::vector<std::pair<std::size_t, std::size_t>> order{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                                                 {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    const std::vector<int> expected{4, 3, 3, 3, 3, 2, 2, 2, 2, 2};
    for (std::size_t k = 0; k < order.size(); ++k)
      for (const auto& e : rel.pairs)
        if (e.i == order[k].first && e.j == order[k].second)
          c.require(e.order == expected[k], "order of pair " + std::to_string(k));
    for (const auto& e : compatibility_audit(CartanMatrix::from_integer(a_prime()), sigma))
      c.require(e.pass && e.product == e.expected, "compatibility");
  });

  criterion(6, "negative type", 1, [&](Check& c) {
    auto t = cartan_type(CartanMatrix::from_integer(a_prime()));
    c.require(t.type == CartanType::negative, "type");
    c.require(t.witness.size() == 5, "witness size");
    for (std::size_t i = 0; i < t.witness.size(); ++i) {
      c.require(t.witness[i].sign() > 0, "witness not positive");
      AlgNum s = 0;
      for (std::size_t k = 0; k < 5; ++k) s += AlgNum(a_prime()(i, k)) * t.witness[k];
      c.require(s.sign() < 0, "A'u not negative");
    }
  });

  criterion(7, "irreducibility, no invariant form", 10, [&](Check& c) {
    c.require(burnside_span_dim(rho()) == 25, "span");
    c.require(invariant_bilinear_forms(rho()).empty(), "integer forms");
    CartanMatrix a = cartan_from_diagram(sigma);
    auto forms = invariant_bilinear_forms(reflection_generators_field(a));
    c.require(forms.size() == 1, "symmetric form space dimension");
    if (forms.size() == 1) {
      AlgNum k = forms[0](0, 0) / a.entries(0, 0);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) c.require(forms[0](i, j) == k * a.entries(i, j), "form not a multiple of A");
    }
  });

  criterion(8, "density certificate", 300, [&](Check& c) {
    auto even = even_subgroup_generators(rho());
    auto cert = certify_zariski_dense(even);
    c.require(cert.complete(), cert.inconclusive.empty() ? "" : cert.inconclusive[0]);
    c.require(revalidate(cert, even).empty(), "revalidation");
    auto again = certify_zariski_dense(even);
    c.require(again.witness_word == cert.witness_word && again.companion_word == cert.companion_word &&
                  again.prime_irreducible == cert.prime_irreducible &&
                  again.prime_transposition == cert.prime_transposition && again.witness_poly == cert.witness_poly,
              "not deterministic");
  });

  criterion(9, "group engine oracles", 60, [&](Check& c) {
    const std::vector<std::pair<CoxeterDiagram, std::size_t>> finite{
        {path_diagram({3}), 6}, {path_diagram({4}), 8}, {path_diagram({3, 3}), 24}, {path_diagram({4, 3, 3}), 384}};
    for (const auto& [d, n] : finite) {
      auto e = todd_coxeter(coxeter_presentation(d), {});
      c.require(e.table && e.table->index() == n, "coset count " + std::to_string(n));
    }
    auto ab = abelianization(coxeter_presentation(sigma));
    c.require(ab.betti == 0 && ab.invariant_factors == std::vector<Integer>{2}, "abelianization");
    for (std::size_t r : {2, 3}) {
      auto p = free_group_presentation(r);
      for (const auto& t : low_index_subgroups(p, 4).tables)
        c.require(abelianization(reidemeister_schreier(p, t).presentation).betti == t.index() * (r - 1) + 1,
                  "Nielsen-Schreier");
    }
  });

  criterion(10, "kernel sampling contract", 600, [&](Check& c) {
    // Default budgets: reported, not asserted.
    Report def = subgroups_search(default_config());
    std::printf("     default budgets: %s\n", def.json["stages"][0]["summary"].get<std::string>().c_str());

    Presentation p = coxeter_presentation(sigma);
    const std::size_t index = 30;
    auto low = low_index_subgroups(p, index);
    std::optional<CosetTable> chosen;
    for (const auto& t : low.tables)
      if (!chosen && abelianization(reidemeister_schreier(p, t).presentation).betti > 0) chosen = t;
    c.require(chosen.has_value(), "no positive-betti subgroup of index <= 30");
    if (!chosen) return;
    auto sub = reidemeister_schreier(p, *chosen);
    auto maps = maps_to_Z(sub.presentation);
    std::size_t words = 0;
    for (const auto& phi : maps)
      for (int radius : {0, 1, 2})
        for (const auto& w : kernel_sample(sub, *chosen, p, phi, radius)) {
          ++words;
          c.require(chosen->act(0, w) == 0, "kernel word leaves coset 1");
          c.require(phi_value(sub, *chosen, p, phi, w) == 0, "kernel word with phi != 0");
        }
    c.require(words > 0, "empty kernel sample");

    RunConfig cfg = default_config();
    cfg.budgets.max_index = index;
    Report rep = witness_pipeline(cfg);
    bool ran = false;
    for (const auto& s : rep.json["stages"])
      if (s["op"] == "density_kernel_sample") {
        std::string st = s["status"];
        ran = st == "pass" || (st == "inconclusive" && !s["summary"].get<std::string>().empty());
        std::printf("     index %zu: %zu kernel words checked; kernel density: %s\n", index, words,
                    s["summary"].get<std::string>().c_str());
      }
    c.require(ran, "kernel density stage missing from the report");
  });

  criterion(11, "geometry", 120, [&](Check& c) {
    auto g = rho();
    IntVector seed = negative_type_seed(CartanMatrix::from_integer(a_prime())).u;
    auto cloud = orbit(g, seed, 6);
    c.require(orbit_closed(cloud, g), "orbit not closed");
    auto w = properness_witness(cloud);
    c.require(w.found && w.margin > 0, "no half-space witness");
    c.require(revalidate_witness(cloud, w.w), "witness revalidation");

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "vinwit_acceptance_limitset";
    fs::remove_all(dir);
    RunConfig cfg = default_config();
    cfg.out_dir = dir.string();
    geometry_limitset(cfg);
    std::string csv = slurp(dir / "limitset.csv"), svg = slurp(dir / "limitset.svg");
    geometry_limitset(cfg);
    c.require(slurp(dir / "limitset.csv") == csv && slurp(dir / "limitset.svg") == svg, "not byte-stable");
    fs::path fixtures = VINWIT_FIXTURE_DIR;
    c.require(csv == slurp(fixtures / "limitset.csv"), "CSV differs from fixture");
    c.require(svg == slurp(fixtures / "limitset.svg"), "SVG differs from fixture");
    fs::remove_all(dir);
  });

  criterion(12, "property suites (10000 cases)", 120, [&](Check& c) {
    std::string cmd = std::string("\"") + VINWIT_UNIT_BINARY + "\" --test-suite=properties --minimal > /dev/null 2>&1";
    c.require(std::system(cmd.c_str()) == 0, "property suite failed");
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
