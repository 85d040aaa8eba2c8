// vinwit: command-line front end.
//
//   vinwit diagram analyze FILE
//   vinwit lanner enumerate --rank R
//   vinwit rep build|verify [--cartan FILE] [--diagram FILE]
//   vinwit density certify [--set even|generators]
//   vinwit subgroups search
//   vinwit geometry orbit|limitset
//   vinwit witness pipeline
//
// Exit codes: 0 pass, 1 incomplete or inconclusive, 2 a check failed,
// 3 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vinwit/error.hpp"
#include "vinwit/pipeline.hpp"

using namespace vinwit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxeterDiagram load_diagram(const std::string& path) {
  std::string text = slurp(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    try {
      return diagram_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  try {
    return CoxeterDiagram::parse_text(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CartanMatrix load_cartan(const std::string& path) {
  try {
    return cartan_from_json(Json::parse(slurp(path)));
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for an integral reflection group in SL(5,Z)"};
  app.require_subcommand(1);

  RunConfig cfg = default_config();
  Budgets& b = cfg.budgets;
  std::string format = "json", diagram_path, cartan_path, which = "even";
  std::size_t rank = 5;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--diagram", diagram_path, "Coxeter diagram file (text format or .json)");
    sub->add_option("--cartan", cartan_path, "integer Cartan matrix JSON");
    sub->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    sub->add_option("--out", cfg.out_dir, "output directory for report.json and figures");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_flag("--timings", cfg.timings, "include wall-clock timings (makes reports non-reproducible)");
    sub->add_option("--budget-max-cosets", b.max_cosets)->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-index", b.max_index, "low-index search ceiling")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-nodes", b.low_index_nodes)->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-word-length", b.word_length)->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-primes", b.prime_bound, "prime bound for factor patterns")->capture_default_str()->check(CLI::Range(2ul, 1000000ul));
    sub->add_option("--budget-words", b.density_words)->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-depth", b.depth, "orbit depth")->capture_default_str()->check(CLI::Range(0ul, 10ul));
    sub->add_option("--budget-samples", b.samples)->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-sample-length", b.sample_length)->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--budget-radius", b.kernel_radius, "kernel sampling radius")->capture_default_str()->check(CLI::Range(0, 10));
  };

  auto* diagram = app.add_subcommand("diagram", "Coxeter diagram analysis")->require_subcommand(1);
  auto* analyze = diagram->add_subcommand("analyze", "Cartan matrix, signature, subdiagrams, type, arithmeticity");
  analyze->add_option("file", diagram_path, "diagram file")->required();
  common(analyze);

  auto* lanner = app.add_subcommand("lanner", "Lanner diagram enumeration")->require_subcommand(1);
  auto* enumerate = lanner->add_subcommand("enumerate", "enumerate connected Lanner diagrams of a rank");
  enumerate->add_option("--rank", rank, "4, 5 or 6")->required()->check(CLI::Range(4ul, 6ul));
  common(enumerate);

  auto* rep = app.add_subcommand("rep", "integer reflection representation")->require_subcommand(1);
  auto* build = rep->add_subcommand("build", "generator matrices");
  auto* verify = rep->add_subcommand("verify", "relations, invariant forms, type");
  common(build);
  common(verify);

  auto* density = app.add_subcommand("density", "Zariski density certificates")->require_subcommand(1);
  auto* certify = density->add_subcommand("certify", "certify the even subgroup (default) or the full group");
  certify->add_option("--set", which, "even or generators")->check(CLI::IsMember({"even", "generators"}))->capture_default_str();
  common(certify);

  auto* subgroups = app.add_subcommand("subgroups", "finite-index subgroups")->require_subcommand(1);
  auto* search = subgroups->add_subcommand("search", "low-index search with torsion, orientation and betti");
  common(search);

  auto* geometry = app.add_subcommand("geometry", "orbits and limit sets")->require_subcommand(1);
  auto* orbit_cmd = geometry->add_subcommand("orbit", "exact orbit and half-space witness");
  auto* limitset = geometry->add_subcommand("limitset", "limit-set sample, CSV and SVG");
  common(orbit_cmd);
  common(limitset);

  auto* witness = app.add_subcommand("witness", "end-to-end pipeline")->require_subcommand(1);
  auto* pipeline = witness->add_subcommand("pipeline", "run every stage and emit one report");
  common(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (!diagram_path.empty()) cfg.diagram = load_diagram(diagram_path);
    if (!cartan_path.empty()) cfg.cartan = load_cartan(cartan_path);

    Report report;
    if (*analyze) report = diagram_analyze(cfg);
    else if (*enumerate) report = lanner_enumerate(rank, cfg);
    else if (*build) report = rep_build(cfg);
    else if (*verify) report = rep_verify(cfg);
    else if (*certify) report = density_certify(cfg, which);
    else if (*search) report = subgroups_search(cfg);
    else if (*orbit_cmd) report = geometry_orbit(cfg);
    else if (*limitset) report = geometry_limitset(cfg);
    else report = witness_pipeline(cfg);

    if (cfg.out_dir) {
      std::filesystem::create_directories(*cfg.out_dir);
      std::ofstream(std::filesystem::path(*cfg.out_dir) / "report.json", std::ios::binary) << dump(report.json);
    }
    std::cout << (format == "json" ? dump(report.json) : report.text());
    return report.exit_code();
  } catch (const ParseError& e) {
    std::cerr << "vinwit: parse error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "vinwit: invalid input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "vinwit: error: " << e.what() << "\n";
    return 2;
  }
}
