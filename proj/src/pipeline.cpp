#include "vinwit/pipeline.hpp"

#include <gmp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vinwit/error.hpp"

namespace vinwit {

const char* to_string(StageStatus s) {
  switch (s) {
    case StageStatus::pass: return "pass";
    case StageStatus::best_effort: return "best_effort";
    case StageStatus::skipped: return "skipped";
    case StageStatus::inconclusive: return "inconclusive";
    case StageStatus::fail: return "fail";
  }
  return "?";
}

int Report::exit_code() const {
  switch (status) {
    case StageStatus::fail: return 2;
    case StageStatus::inconclusive: return 1;
    default: return 0;
  }
}

std::string Report::text() const {
  std::ostringstream out;
  out << json.at("command").get<std::string>() << ": " << json.at("status").get<std::string>() << "\n";
  for (const auto& st : json.at("stages"))
    out << "  [" << st.at("status").get<std::string>() << "] " << st.at("op").get<std::string>() << ": "
        << st.at("summary").get<std::string>() << "\n";
  return out.str();
}

IntMatrix default_integer_cartan() {
  return IntMatrix::from_rows(
      {{2, -1, 0, 0, -1}, {-2, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {-1, 0, 0, -1, 2}});
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.diagram = pentagon_diagram();
  cfg.cartan = CartanMatrix::from_integer(default_integer_cartan());
  return cfg;
}

namespace {

struct Stage {
  explicit Stage(std::string o, StageStatus st = StageStatus::pass, std::string sum = "")
      : op(std::move(o)), status(st), summary(std::move(sum)) {}
  std::string op;
  StageStatus status = StageStatus::pass;
  std::string summary;
  Json result = Json::object();
};

Json stage_json(const Stage& s) {
  Json j;
  j["op"] = s.op;
  j["status"] = to_string(s.status);
  j["summary"] = s.summary;
  j["result"] = s.result;
  return j;
}

Json budgets_json(const Budgets& b) {
  return Json{{"max_cosets", b.max_cosets},       {"max_index", b.max_index},
              {"low_index_nodes", b.low_index_nodes}, {"word_length", b.word_length},
              {"prime_bound", b.prime_bound},     {"density_words", b.density_words},
              {"depth", b.depth},                 {"samples", b.samples},
              {"sample_length", b.sample_length}, {"kernel_radius", b.kernel_radius}};
}

class Builder {
 public:
  Builder(std::string command, const RunConfig& cfg) : cfg_(cfg) {
    json_["tool"] = Json{{"name", "vinwit"}, {"version", "0.1.0"}, {"gmp", gmp_version}};
    json_["command"] = std::move(command);
    json_["config"] = Json{{"seed", cfg.seed}, {"budgets", budgets_json(cfg.budgets)}};
    json_["stages"] = Json::array();
  }

  Json& config() { return json_["config"]; }

  void add(const Stage& s) {
    json_["stages"].push_back(stage_json(s));
    if (static_cast<int>(s.status) > static_cast<int>(worst_)) worst_ = s.status;
  }

  template <class F>
  void timed(Stage& s, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    if (cfg_.timings)
      s.result["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  Report finish() {
    // best_effort and skipped do not lower the overall verdict below pass
    StageStatus overall = worst_ == StageStatus::best_effort || worst_ == StageStatus::skipped ? StageStatus::pass : worst_;
    json_["status"] = to_string(overall);
    return Report{std::move(json_), overall};
  }

 private:
  const RunConfig& cfg_;
  Json json_;
  StageStatus worst_ = StageStatus::pass;
};

std::string sig_str(const SignatureReport& s) {
  return "(" + std::to_string(s.positives) + "," + std::to_string(s.zeros) + "," + std::to_string(s.negatives) + ")";
}

Stage stage_diagram(const CoxeterDiagram& d, bool require_lanner) {
  Stage s{"diagram_analysis"};
  CartanMatrix a = cartan_from_diagram(d);
  auto sig = signature(a.entries);
  auto subs = classify_subdiagrams(d);
  bool all_elliptic = std::all_of(subs.begin(), subs.end(), [](const SubdiagramClass& c) { return c.elliptic; });
  bool lanner = is_lanner(d);
  auto ar = arithmeticity_report(d);

  s.result["diagram"] = to_json(d);
  s.result["cartan"] = Json{{"op", "cartan_from_diagram"}, {"matrix", to_json(a.entries)}};
  s.result["signature"] = Json{{"op", "signature"}, {"value", to_json(sig)}};
  Json sj = Json::array();
  for (const auto& c : subs) {
    Json v = Json::array();
    for (auto i : c.vertices) v.push_back(i + 1);
    sj.push_back(Json{{"vertices", v}, {"signature", to_json(c.signature)}, {"elliptic", c.elliptic}});
  }
  s.result["subdiagrams"] = Json{{"op", "classify_subdiagrams"},
                                 {"count", subs.size()},
                                 {"all_elliptic", all_elliptic},
                                 {"classes", sj}};
  s.result["elliptic"] = Json{{"op", "is_elliptic"}, {"value", is_elliptic(d)}};
  s.result["lanner"] = Json{{"op", "is_lanner"}, {"value", lanner}};
  Json arj = to_json(ar);
  arj["op"] = "arithmeticity_report";
  s.result["arithmeticity"] = arj;
  std::string type = "n/a (decomposable)";
  if (d.connected()) {
    auto ct = cartan_type(a);
    Json tj = to_json(ct);
    tj["op"] = "cartan_type";
    s.result["type"] = tj;
    type = to_string(ct.type);
  }
  s.summary = "signature " + sig_str(sig) + ", " + std::to_string(subs.size()) + " proper subdiagrams" +
              (all_elliptic ? " all elliptic" : " not all elliptic") + ", " + (lanner ? "Lanner" : "not Lanner") +
              ", type " + type + ", field " + ar.field +
              (ar.all_conjugates_positive_definite ? ", nontrivial conjugates positive definite" : "");
  if (require_lanner && !lanner) s.status = StageStatus::fail;
  return s;
}

Stage stage_representation(const RunConfig& cfg, std::vector<GroupElement>& gens) {
  Stage s{"reflection_generators"};
  const CartanMatrix& a = cfg.cartan;
  s.result["cartan"] = cartan_to_json(a);
  if (!a.is_integral()) {
    s.status = StageStatus::fail;
    s.summary = "Cartan matrix is not integral";
    return s;
  }
  gens = reflection_generators(a);
  Json gj = Json::array();
  bool ok = true;
  for (const auto& g : gens) {
    Integer det = determinant(g.matrix);
    bool inv = (g.matrix * g.matrix).is_identity();
    ok = ok && inv && det == -1;
    gj.push_back(Json{{"matrix", to_json(g.matrix)}, {"determinant", to_json(det)}, {"involution", inv}});
  }
  s.result["generators"] = gj;
  if (a.rank() == cfg.diagram.rank()) {
    auto audit = compatibility_audit(a, cfg.diagram);
    bool compatible = std::all_of(audit.begin(), audit.end(), [](const CompatibilityEntry& e) { return e.pass; });
    s.result["compatibility"] = Json{{"op", "compatibility_audit"}, {"all_pass", compatible}, {"pairs", to_json(audit)}};
    if (!compatible) {
      ok = false;
      for (const auto& e : audit)
        if (!e.pass) {
          s.summary = "compatibility fails at pair (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                      "): A'_ij A'_ji = " + e.product.str() + ", expected " + e.expected.str();
          break;
        }
    }
  } else {
    ok = false;
    s.summary = "Cartan rank does not match the diagram";
  }
  if (ok) s.summary = std::to_string(gens.size()) + " integer reflections, involutive, determinant -1, compatible with the diagram";
  s.status = ok ? StageStatus::pass : StageStatus::fail;
  return s;
}

Stage stage_relations(const RunConfig& cfg, const std::vector<GroupElement>& gens) {
  Stage s{"verify_relations"};
  auto rep = verify_relations(gens, cfg.diagram);
  s.result = to_json(rep);
  if (auto f = rep.first_failure()) {
    s.status = StageStatus::fail;
    s.summary = "pair (" + std::to_string(f->i + 1) + "," + std::to_string(f->j + 1) + ") has order " +
                (f->order ? std::to_string(*f->order) : "> " + std::to_string(rep.cap)) + ", expected " +
                std::to_string(f->expected);
  } else {
    std::string orders;
    for (const auto& e : rep.pairs) orders += (orders.empty() ? "" : ",") + std::to_string(*e.order);
    s.summary = "all " + std::to_string(rep.pairs.size()) + " pair orders match (" + orders + ")";
  }
  return s;
}

Stage stage_invariant_forms(const RunConfig& cfg, const std::vector<GroupElement>& gens) {
  Stage s{"invariant_bilinear_forms"};
  std::size_t n = gens.empty() ? 0 : gens[0].matrix.rows();
  std::size_t span = burnside_span_dim(gens);
  auto forms = invariant_bilinear_forms(gens);
  s.result["span"] = Json{{"op", "burnside_span_dim"}, {"value", span}, {"full", n * n}};
  s.result["integer_forms"] = Json{{"op", "invariant_bilinear_forms"}, {"dimension", forms.size()}};
  // symmetric representation from the diagram, for contrast
  CartanMatrix sym = cartan_from_diagram(cfg.diagram);
  auto fgens = reflection_generators_field(sym);
  auto sforms = invariant_bilinear_forms(fgens);
  bool contains_a = false;
  if (sforms.size() == 1) {
    // the unique form is proportional to A
    const AlgMatrix& f = sforms[0];
    std::optional<AlgNum> ratio;
    contains_a = true;
    for (std::size_t i = 0; i < f.rows() && contains_a; ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) {
        const AlgNum& x = sym.entries(i, j);
        if (x.is_zero()) {
          if (!f(i, j).is_zero()) contains_a = false;
          continue;
        }
        AlgNum r = f(i, j) * x.inverse();
        if (!ratio) ratio = r;
        else if (!(r == *ratio)) contains_a = false;
      }
  }
  s.result["symmetric_forms"] = Json{{"op", "invariant_bilinear_forms"}, {"dimension", sforms.size()}, {"spanned_by_cartan", contains_a}};
  bool ok = span == n * n && forms.empty();
  s.status = ok ? StageStatus::pass : StageStatus::fail;
  s.summary = "span " + std::to_string(span) + "/" + std::to_string(n * n) + ", invariant forms " +
              std::to_string(forms.size()) + " (symmetric representation: " + std::to_string(sforms.size()) +
              (contains_a ? ", spanned by A)" : ")");
  return s;
}

Stage stage_type(const CartanMatrix& a) {
  Stage s{"cartan_type"};
  auto ct = cartan_type(a);
  s.result = to_json(ct);
  s.summary = std::string(to_string(ct.type)) + " type";
  if (ct.type == CartanType::negative) {
    auto seed = negative_type_seed(a);
    s.result["seed"] = Json{{"op", "negative_type_seed"}, {"u", to_json(seed.u)}, {"image", to_json(seed.image)}};
    s.summary += ", integer seed u with A'u < 0";
  } else {
    s.status = StageStatus::fail;
  }
  return s;
}

Stage stage_density(const std::string& op_label, const std::vector<GroupElement>& gens, const Budgets& b) {
  Stage s{op_label};
  s.result["generators"] = gens.size();
  DensityCertificate cert;
  try {
    cert = certify_zariski_dense(gens, {b.word_length, b.prime_bound, b.density_words});
  } catch (const InvalidInput& e) {
    s.status = StageStatus::fail;
    s.summary = e.what();
    return s;
  }
  s.result["certificate"] = to_json(cert);
  s.result["certificate"]["op"] = "certify_zariski_dense";
  if (!cert.complete()) {
    s.status = StageStatus::inconclusive;
    s.summary = "inconclusive: " + cert.inconclusive.front();
    return s;
  }
  auto problems = revalidate(cert, gens);
  s.result["revalidation"] = Json{{"op", "revalidate"}, {"failures", problems}};
  if (!problems.empty()) {
    s.status = StageStatus::fail;
    s.summary = "certificate failed revalidation: " + problems.front();
    return s;
  }
  s.summary = "Zariski dense: span 25, no invariant form, S5 witness at word " +
              std::to_string(cert.words_examined) + " (primes " + std::to_string(cert.prime_irreducible) + ", " +
              std::to_string(cert.prime_transposition) + "), non-commuting companion";
  return s;
}

struct SubgroupSearch {
  std::vector<SubgroupFinding> findings;
  std::optional<std::size_t> chosen;  // index into findings
};

Stage stage_subgroups(const RunConfig& cfg, const Presentation& p, SubgroupSearch& out) {
  Stage s{"low_index_subgroups"};
  const Budgets& b = cfg.budgets;
  auto li = low_index_subgroups(p, b.max_index, b.low_index_nodes);
  s.result["max_index"] = b.max_index;
  s.result["nodes"] = li.nodes;
  s.result["search_complete"] = li.status == EnumerationStatus::complete;
  s.result["classes"] = li.tables.size();

  // A torsion-free subgroup meets each finite parabolic trivially, so its
  // index is divisible by every finite parabolic order.
  Integer bound = 1;
  bool all_finite = true;
  Json parabolics = Json::array();
  for (std::size_t drop = 0; drop < cfg.diagram.rank(); ++drop) {
    std::vector<std::size_t> J;
    for (std::size_t v = 0; v < cfg.diagram.rank(); ++v)
      if (v != drop) J.push_back(v);
    CoxeterDiagram sub = cfg.diagram.induced(J);
    if (!is_elliptic(sub)) {
      all_finite = false;
      continue;
    }
    auto e = todd_coxeter(coxeter_presentation(sub), {}, b.max_cosets);
    if (!e.table) {
      all_finite = false;
      continue;
    }
    bound = lcm(bound, Integer(static_cast<unsigned long>(e.table->index())));
    parabolics.push_back(Json{{"dropped_vertex", drop + 1}, {"order", e.table->index()}});
  }
  s.result["maximal_parabolics"] = parabolics;
  if (all_finite) s.result["torsion_free_index_multiple_of"] = to_json(bound);

  Json fj = Json::array();
  for (const auto& t : li.tables) {
    if (t.index() == 1) continue;
    SubgroupFinding f;
    try {
      f = analyze_subgroup(t, cfg.diagram, p);
    } catch (const InvalidInput&) {
      f.table = t;
      f.index = t.index();
      f.orientation_preserving = p.all_involutions() && orientation_preserving(t, p);
      f.abelianization = abelianization(reidemeister_schreier(p, t).presentation);
    }
    Json j = to_json(f);
    j["op"] = "analyze_subgroup";
    fj.push_back(std::move(j));
    out.findings.push_back(std::move(f));
  }
  s.result["findings"] = fj;

  auto pick = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < out.findings.size(); ++i)
      if (pred(out.findings[i])) return i;
    return std::nullopt;
  };
  auto ideal = [](const SubgroupFinding& f) { return f.torsion_free && f.orientation_preserving && f.abelianization.betti > 0; };
  bool ideal_found = pick(ideal).has_value();
  out.chosen = ideal_found ? pick(ideal) : pick([](const SubgroupFinding& f) { return f.abelianization.betti > 0; });
  s.result["torsion_free_positive_betti_found"] = ideal_found;
  s.result["selected"] = out.chosen ? Json(*out.chosen) : Json(nullptr);

  std::size_t positive = 0, tf = 0;
  for (const auto& f : out.findings) {
    positive += f.abelianization.betti > 0;
    tf += f.torsion_free;
  }
  s.summary = std::to_string(out.findings.size()) + " proper subgroup classes of index <= " + std::to_string(b.max_index) +
              ", " + std::to_string(tf) + " torsion-free, " + std::to_string(positive) + " with positive betti";
  if (all_finite) s.summary += "; torsion-free index must be a multiple of " + bound.get_str();
  if (li.status == EnumerationStatus::resource_limit) {
    s.status = StageStatus::inconclusive;
    s.summary += " (node budget exhausted)";
  } else {
    s.status = StageStatus::best_effort;
  }
  return s;
}

Stage skipped(const std::string& op, const std::string& why) {
  Stage s{op, StageStatus::skipped, why};
  return s;
}

Stage stage_geometry_orbit(const RunConfig& cfg, const std::vector<GroupElement>& gens, std::optional<IntVector>& chart) {
  Stage s{"orbit"};
  auto seed = negative_type_seed(cfg.cartan);
  OrbitCloud cloud;
  try {
    cloud = orbit(gens, seed.u, cfg.budgets.depth);
  } catch (const InvalidInput& e) {
    s.status = StageStatus::fail;
    s.summary = e.what();
    return s;
  }
  bool closed = orbit_closed(cloud, gens);
  auto pw = properness_witness(cloud);
  s.result["seed"] = Json{{"op", "negative_type_seed"}, {"u", to_json(seed.u)}, {"image", to_json(seed.image)}};
  s.result["depth"] = cloud.depth;
  s.result["points"] = cloud.points.size();
  s.result["truncated"] = cloud.truncated;
  s.result["closed"] = Json{{"op", "orbit_closed"}, {"value", closed}};
  Json pj = to_json(pw);
  pj["op"] = "properness_witness";
  if (pw.found) pj["revalidated"] = revalidate_witness(cloud, pw.w);
  s.result["properness"] = pj;
  if (pw.found) {
    chart = pw.w;
    std::string w;
    for (const auto& x : pw.w) w += (w.empty() ? "" : ",") + x.get_str();
    s.summary = std::to_string(cloud.points.size()) + " points at depth " + std::to_string(cloud.depth) +
                ", closed, half-space functional (" + w + ") with margin " + pw.margin.get_str();
  } else {
    s.summary = std::to_string(cloud.points.size()) + " points; no half-space witness (violating depth " +
                std::to_string(pw.violating_depth) + ")";
  }
  s.status = closed && pw.found && !cloud.truncated ? StageStatus::pass
             : cloud.truncated                     ? StageStatus::inconclusive
                                                   : StageStatus::fail;
  return s;
}

Stage stage_limit_set(const RunConfig& cfg, const std::vector<GroupElement>& gens, const std::optional<IntVector>& chart) {
  Stage s{"limit_set_sample"};
  SampleConfig sc;
  sc.count = cfg.budgets.samples;
  sc.word_length = cfg.budgets.sample_length;
  sc.seed = cfg.seed;
  sc.chart = chart;
  try {
    sc.chamber = chamber_seed(cfg.cartan).u;
  } catch (const InvalidInput&) {
  }
  auto pts = limit_set_sample(gens, sc);
  std::size_t prox = 0;
  for (const auto& p : pts) prox += p.proximal;
  RenderOptions ro;
  ro.chart = chart;
  auto fig = render(pts, ro);
  s.result["seed"] = cfg.seed;
  s.result["count"] = pts.size();
  s.result["word_length"] = sc.word_length;
  s.result["geodesic_words"] = sc.chamber.has_value();
  if (sc.chamber) s.result["chamber_point"] = to_json(*sc.chamber);
  s.result["proximal"] = prox;
  s.result["chart"] = chart ? to_json(*chart) : Json(nullptr);
  s.result["warnings"] = fig.warnings;
  if (cfg.out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(*cfg.out_dir);
    fs::path csv = fs::path(*cfg.out_dir) / "limitset.csv", svg = fs::path(*cfg.out_dir) / "limitset.svg";
    std::ofstream(csv, std::ios::binary) << fig.csv;
    std::ofstream(svg, std::ios::binary) << fig.svg;
    s.result["files"] = Json{{"csv", "limitset.csv"}, {"svg", "limitset.svg"}};
  }
  s.summary = std::to_string(prox) + "/" + std::to_string(pts.size()) + " samples proximal (length " +
              std::to_string(sc.word_length) + ", seed " + std::to_string(cfg.seed) + ")";
  return s;
}

}  // namespace

Report diagram_analyze(const RunConfig& cfg) {
  Builder b("diagram analyze", cfg);
  Stage s = stage_diagram(cfg.diagram, false);
  b.add(s);
  return b.finish();
}

Report lanner_enumerate(std::size_t rank, const RunConfig& cfg) {
  Builder b("lanner enumerate", cfg);
  Stage s{"enumerate_lanner"};
  std::vector<CoxeterDiagram> all, kept;
  b.timed(s, [&] {
    all = enumerate_lanner(rank);
    kept = integrality_filter(all);
  });
  s.result["rank"] = rank;
  s.result["diagrams"] = Json::array();
  for (const auto& d : all) s.result["diagrams"].push_back(to_json(d));
  s.result["integrality_filter"] = Json{{"op", "integrality_filter"}, {"diagrams", Json::array()}};
  for (const auto& d : kept) s.result["integrality_filter"]["diagrams"].push_back(to_json(d));
  s.summary = std::to_string(all.size()) + " Lanner diagrams of rank " + std::to_string(rank) + ", " +
              std::to_string(kept.size()) + " with integral 4cos^2";
  b.add(s);
  return b.finish();
}

Report rep_build(const RunConfig& cfg) {
  Builder b("rep build", cfg);
  std::vector<GroupElement> gens;
  b.add(stage_representation(cfg, gens));
  return b.finish();
}

Report rep_verify(const RunConfig& cfg) {
  Builder b("rep verify", cfg);
  std::vector<GroupElement> gens;
  Stage rep = stage_representation(cfg, gens);
  b.add(rep);
  if (gens.empty()) return b.finish();
  b.add(stage_relations(cfg, gens));
  b.add(stage_invariant_forms(cfg, gens));
  b.add(stage_type(cfg.cartan));
  return b.finish();
}

Report density_certify(const RunConfig& cfg, const std::string& which) {
  Builder b("density certify", cfg);
  b.config()["generator_set"] = which;
  if (!cfg.cartan.is_integral()) throw InvalidInput("density certify: Cartan matrix must be integral");
  auto gens = reflection_generators(cfg.cartan);
  if (which == "even")
    gens = even_subgroup_generators(gens);
  else if (which != "generators")
    throw InvalidInput("density certify: generator set must be 'even' or 'generators'");
  b.add(stage_density("certify_zariski_dense", gens, cfg.budgets));
  return b.finish();
}

Report subgroups_search(const RunConfig& cfg) {
  Builder b("subgroups search", cfg);
  SubgroupSearch search;
  b.add(stage_subgroups(cfg, coxeter_presentation(cfg.diagram), search));
  return b.finish();
}

Report geometry_orbit(const RunConfig& cfg) {
  Builder b("geometry orbit", cfg);
  auto gens = reflection_generators(cfg.cartan);
  std::optional<IntVector> chart;
  b.add(stage_geometry_orbit(cfg, gens, chart));
  return b.finish();
}

Report geometry_limitset(const RunConfig& cfg) {
  Builder b("geometry limitset", cfg);
  auto gens = reflection_generators(cfg.cartan);
  std::optional<IntVector> chart;
  Stage orbit_stage = stage_geometry_orbit(cfg, gens, chart);
  b.add(orbit_stage);
  b.add(stage_limit_set(cfg, gens, chart));
  return b.finish();
}

Report witness_pipeline(const RunConfig& cfg) {
  Builder b("witness pipeline", cfg);
  const Budgets& bud = cfg.budgets;

  b.add(stage_diagram(cfg.diagram, true));
  std::vector<GroupElement> gens;
  Stage rep = stage_representation(cfg, gens);
  b.add(rep);
  Stage rel = gens.empty() ? skipped("verify_relations", "no generators") : stage_relations(cfg, gens);
  if (!gens.empty()) b.add(rel);
  const char* later[] = {"invariant_bilinear_forms", "cartan_type", "density_even_subgroup", "low_index_subgroups",
                         "maps_to_Z", "kernel_sample", "density_kernel_sample", "orbit", "limit_set_sample"};
  if (rep.status == StageStatus::fail || rel.status == StageStatus::fail || gens.empty()) {
    std::string why = "halted: " + (rep.status == StageStatus::fail ? rep.summary : rel.summary);
    for (const char* op : later) b.add(skipped(op, why));
    return b.finish();
  }
  b.add(stage_invariant_forms(cfg, gens));
  Stage type = stage_type(cfg.cartan);
  b.add(type);
  b.add(stage_density("density_even_subgroup", even_subgroup_generators(gens), bud));

  Presentation p = coxeter_presentation(cfg.diagram);
  SubgroupSearch search;
  b.add(stage_subgroups(cfg, p, search));
  if (!search.chosen) {
    std::string why = "no subgroup with positive first betti number of index <= " + std::to_string(bud.max_index);
    b.add(skipped("maps_to_Z", why));
    b.add(skipped("kernel_sample", why));
    b.add(skipped("density_kernel_sample", why));
  } else {
    const SubgroupFinding& f = search.findings[*search.chosen];
    auto sub = reidemeister_schreier(p, f.table);
    auto maps = maps_to_Z(sub.presentation);
    Stage ms{"maps_to_Z"};
    ms.result["subgroup_index"] = f.index;
    ms.result["torsion_free"] = f.torsion_free;
    ms.result["subgroup_generators"] = Json::array();
    for (const auto& w : sub.generator_words) ms.result["subgroup_generators"].push_back(free_word_json(w));
    ms.result["epimorphisms"] = Json::array();
    for (const auto& e : maps) ms.result["epimorphisms"].push_back(to_json(e));
    ms.summary = std::to_string(maps.size()) + " independent maps onto Z from the index-" + std::to_string(f.index) +
                 " subgroup" + (f.torsion_free ? "" : " (not torsion-free)");
    b.add(ms);

    Stage ks{"kernel_sample"};
    auto words = kernel_sample(sub, f.table, p, maps[0], bud.kernel_radius);
    ks.result["radius"] = bud.kernel_radius;
    ks.result["count"] = words.size();
    ks.result["words"] = Json::array();
    for (const auto& w : words) ks.result["words"].push_back(free_word_json(w));
    ks.result["checked"] = "phi = 0 and coset 1 fixed, per word";
    ks.summary = std::to_string(words.size()) + " kernel elements, each with phi = 0 and fixing coset 1";
    b.add(ks);

    std::vector<GroupElement> kgens;
    for (const auto& w : words) kgens.push_back(evaluate_word(gens, to_generator_indices(w)));
    b.add(stage_density("density_kernel_sample", kgens, bud));
  }

  std::optional<IntVector> chart;
  if (type.status == StageStatus::pass) {
    b.add(stage_geometry_orbit(cfg, gens, chart));
    b.add(stage_limit_set(cfg, gens, chart));
  } else {
    b.add(skipped("orbit", "Cartan matrix is not of negative type"));
    b.add(skipped("limit_set_sample", "Cartan matrix is not of negative type"));
  }
  return b.finish();
}

}  // namespace vinwit
