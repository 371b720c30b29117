// Command-line front end: containment queries, the wqo dichotomy,
// decomposition certificates, certificate verification, antichain
// generators and pairwise incomparability reports.
//
// Exit codes: 0 success/yes, 1 no, 2 budget exhausted (unknown),
// 3 precondition violated, 64 unusable input, 70 internal error.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wqoim/antichains.hpp"
#include "wqoim/certjson.hpp"
#include "wqoim/containment.hpp"
#include "wqoim/decompose.hpp"
#include "wqoim/dichotomy.hpp"
#include "wqoim/graph.hpp"
#include "wqoim/graph6.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBadInput = 64;
constexpr int kExitInternal = 70;

// Thrown for unusable input (unreadable file, malformed graph6/JSON).
struct bad_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw bad_input("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

wqoim::Graph read_graph(const std::string& path) {
  const std::string text = read_text(path);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return wqoim::graph6_decode(line);
    } catch (const std::invalid_argument& e) {
      throw bad_input("'" + path + "': " + e.what());
    }
  }
  throw bad_input("'" + path + "': no graph6 line found");
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WQOIM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw bad_input("WQOIM_BUDGET is not a number");
    }
  }
  return wqoim::default_budget();
}

int run(int argc, char** argv) {
  CLI::App app{"wqoim: induced-minor containment, wqo dichotomy, decompositions"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;  // reserved for future randomized tie-breaking
  app.add_option("--seed", seed, "random seed (no current command randomizes)");

  // contains
  std::string pattern_path, host_path;
  std::string relation_name = "induced-minor";
  std::vector<int> root;
  std::optional<std::uint64_t> budget_flag;
  auto* contains = app.add_subcommand("contains", "does PATTERN embed into HOST?");
  contains->add_option("pattern", pattern_path, "pattern graph6 file ('-' for stdin)")->required();
  contains->add_option("host", host_path, "host graph6 file")->required();
  contains->add_option("--relation", relation_name, "induced-minor | induced-subgraph | contraction")
      ->check(CLI::IsMember({"induced-minor", "induced-subgraph", "contraction"}));
  contains->add_option("--rooted", root,
                       "pu,pv,hu,hv: match the pattern edge pu-pv onto the host edge hu-hv")
      ->delimiter(',')
      ->expected(4);
  contains->add_option("--budget", budget_flag, "search node budget (else $WQOIM_BUDGET)");

  // dichotomy
  std::string dichotomy_path;
  auto* dichotomy = app.add_subcommand("dichotomy", "is excluding H well-quasi-ordered?");
  dichotomy->add_option("graph", dichotomy_path, "graph6 file")->required();

  // decompose
  std::string decompose_kind, decompose_path;
  auto* decompose = app.add_subcommand("decompose", "emit a structure certificate");
  decompose->add_option("kind", decompose_kind, "k4hat | gem")
      ->required()
      ->check(CLI::IsMember({"k4hat", "gem"}));
  decompose->add_option("graph", decompose_path, "graph6 file")->required();

  // verify
  std::string verify_kind, verify_graph_path, verify_cert_path;
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("kind", verify_kind, "k4hat | gem")
      ->required()
      ->check(CLI::IsMember({"k4hat", "gem"}));
  verify->add_option("graph", verify_graph_path, "graph6 file")->required();
  verify->add_option("certificate", verify_cert_path, "certificate JSON file ('-' for stdin)")
      ->required();

  // gen
  std::string gen_family;
  int gen_index = 0;
  auto* gen_cmd = app.add_subcommand("gen", "print an antichain family member as graph6");
  gen_cmd->add_option("family", gen_family,
                      "double-wheel | matousek-chain | ding-interval | antihole | nested-lozenge")
      ->required();
  gen_cmd->add_option("index", gen_index, "member index")->required();

  // verify-antichain
  std::string anti_family;
  int anti_count = 2;
  std::optional<std::uint64_t> anti_budget_flag;
  auto* anti = app.add_subcommand("verify-antichain", "pairwise incomparability report");
  anti->add_option("family", anti_family, "family name")->required();
  anti->add_option("--count", anti_count, "number of members, from the least index")
      ->check(CLI::PositiveNumber);
  anti->add_option("--budget", anti_budget_flag, "per-pair node budget (else $WQOIM_BUDGET)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadInput;
  }

  if (contains->parsed()) {
    const wqoim::Graph pattern = read_graph(pattern_path);
    const wqoim::Graph host = read_graph(host_path);
    wqoim::Relation rel;
    if (!root.empty()) {
      if (relation_name != "induced-minor")
        throw bad_input("--rooted applies to the induced-minor relation only");
      rel = wqoim::Relation::rooted(root[0], root[1], root[2], root[3]);
    } else if (relation_name == "induced-minor") {
      rel = wqoim::Relation::induced_minor();
    } else if (relation_name == "induced-subgraph") {
      rel = wqoim::Relation::induced_subgraph();
    } else {
      rel = wqoim::Relation::contraction();
    }
    const auto result = wqoim::find_model(pattern, host, rel, resolve_budget(budget_flag));
    switch (result.outcome) {
      case wqoim::SearchOutcome::Found:
        std::cout << wqoim::model_to_json(*result.model) << "\n";
        return kExitYes;
      case wqoim::SearchOutcome::Absent:
        std::cout << "{\"schema\":1,\"outcome\":\"not-contained\"}\n";
        return kExitNo;
      case wqoim::SearchOutcome::Unknown:
        std::cout << "{\"schema\":1,\"outcome\":\"unknown\",\"nodes\":" << result.nodes << "}\n";
        return kExitUnknown;
    }
    return kExitInternal;
  }

  if (dichotomy->parsed()) {
    const wqoim::Graph h = read_graph(dichotomy_path);
    const wqoim::WqoVerdict verdict = wqoim::classify(h);
    std::cout << wqoim::verdict_to_json(verdict, wqoim::complement_filter(h)) << "\n";
    return verdict.wqo ? kExitYes : kExitNo;
  }

  if (decompose->parsed()) {
    const wqoim::Graph g = read_graph(decompose_path);
    try {
      if (decompose_kind == "k4hat") {
        std::cout << wqoim::k4hat_cert_to_json(wqoim::decompose_k4hat(g)) << "\n";
      } else {
        std::cout << wqoim::gem_cert_to_json(wqoim::decompose_gem(g)) << "\n";
      }
    } catch (const wqoim::precondition_error& e) {
      std::cerr << "precondition: " << e.what() << "\n";
      if (e.witness_model)
        std::cerr << "witness: " << wqoim::model_to_json(*e.witness_model) << "\n";
      if (e.cut_vertex) std::cerr << "cut vertex: " << *e.cut_vertex << "\n";
      return kExitPrecondition;
    }
    return kExitYes;
  }

  if (verify->parsed()) {
    const wqoim::Graph g = read_graph(verify_graph_path);
    const std::string text = read_text(verify_cert_path);
    bool ok = false;
    try {
      if (verify_kind == "k4hat") {
        ok = wqoim::verify_k4hat(g, wqoim::k4hat_cert_from_json(text));
      } else {
        ok = wqoim::verify_gem(g, wqoim::gem_cert_from_json(text));
      }
    } catch (const std::invalid_argument& e) {
      throw bad_input(std::string("certificate: ") + e.what());
    }
    std::cout << (ok ? "accepted" : "rejected") << "\n";
    return ok ? kExitYes : kExitNo;
  }

  if (gen_cmd->parsed()) {
    const auto family = wqoim::family_from_name(gen_family);
    if (!family) throw bad_input("unknown family '" + gen_family + "'");
    wqoim::Graph g(0);
    try {
      g = wqoim::gen(*family, gen_index);
    } catch (const std::invalid_argument& e) {
      throw bad_input(e.what());
    }
    std::cout << wqoim::graph6_encode(g) << "\n";
    return kExitYes;
  }

  if (anti->parsed()) {
    const auto family = wqoim::family_from_name(anti_family);
    if (!family) throw bad_input("unknown family '" + anti_family + "'");
    wqoim::IncomparabilityReport report;
    try {
      report = wqoim::verify_pairwise_incomparable(*family, anti_count,
                                                   resolve_budget(anti_budget_flag));
    } catch (const std::invalid_argument& e) {
      throw bad_input(e.what());
    }
    std::cout << wqoim::incomparability_report_to_json(report) << "\n";
    if (!report.all_incomparable()) return kExitNo;
    if (report.any_unknown()) return kExitUnknown;
    return kExitYes;
  }

  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bad_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const wqoim::precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
