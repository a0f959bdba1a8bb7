#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hurwitz/equalities.hpp"
#include "hurwitz/suites.hpp"
#include "hurwitz/toddcoxeter.hpp"
#include "json.hpp"

using namespace hurwitz;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kFailure = 2, kInconclusive = 3 };

struct Config {
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t coset_cap = kDefaultCosetCap;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool strict = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load_presentation(const std::string& builtin_name, const std::string& source) {
  if (!builtin_name.empty() && !source.empty()) throw UsageError("give either --builtin or a presentation, not both");
  if (!builtin_name.empty()) return builtin_from_string(builtin_name);
  if (source.empty()) throw UsageError("no presentation given");
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '<') return parse_presentation(source);
  if (std::filesystem::exists(source)) return parse_presentation(read_file(source));
  throw UsageError("'" + source + "' is neither a presentation nor a readable file");
}

std::optional<int> symmetric_degree(const std::string& name) {
  if (name.size() < 2 || (name[0] != 's' && name[0] != 'S')) return std::nullopt;
  int n = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
    n = n * 10 + (name[k] - '0');
  }
  return n;
}

CayleyRealization realize_or_throw(const Presentation& p, const Config& cfg) {
  Enumeration e = enumerate(p, cfg.coset_cap);
  if (!e.realization) {
    throw CapExceeded("coset enumeration exceeded --coset-cap " + std::to_string(cfg.coset_cap) +
                      " (the group may be infinite)");
  }
  return std::move(*e.realization);
}

GroupPtr load_group(const std::string& builtin_name, const std::string& source, const Config& cfg) {
  if (auto n = symmetric_degree(builtin_name); n && source.empty()) return symmetric_group(*n);
  Presentation p = load_presentation(builtin_name, source);
  return cayley_group(realize_or_throw(p, cfg), builtin_name);
}

int inconclusive_exit(const Config& cfg) { return cfg.strict ? kInconclusive : kOk; }

// ---- commands -------------------------------------------------------------------

int cmd_realize(const Config& cfg, const std::string& builtin_name, const std::string& source,
                const std::string& export_path) {
  Presentation p = load_presentation(builtin_name, source);
  CayleyRealization r = realize_or_throw(p, cfg);
  auto rev = check_reversible(p, r);
  CayleyGroup G(r);
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw UsageError("cannot write " + export_path);
    out << r.to_json() << "\n";
  }
  if (cfg.format == "json") {
    json j;
    j["presentation"] = p.to_string();
    j["order"] = r.order();
    json gens = json::array();
    for (std::uint32_t g = 0; g < p.generator_count(); ++g) {
      gens.push_back({{"name", p.generators()[g]}, {"order", element_order(G, r.generator_element(g))}});
    }
    j["generators"] = gens;
    j["reversible"] = to_string(rev.status);
    if (rev.witness_relator) {
      j["witness_relator"] = rev.witness_relator->to_string();
      j["witness_reverse"] = rev.witness_reverse->to_string();
      j["witness_value"] = G.label(r.evaluate(*rev.witness_reverse));
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "presentation: " << p.to_string() << "\n";
  std::cout << "order: " << r.order() << "\n";
  std::cout << "generator orders:";
  for (std::uint32_t g = 0; g < p.generator_count(); ++g) {
    std::cout << " " << p.generators()[g] << "=" << element_order(G, r.generator_element(g));
  }
  std::cout << "\n";
  std::cout << "reversible: "
            << (rev.status == Reversibility::Reversible      ? "yes"
                : rev.status == Reversibility::NotReversible ? "no"
                                                             : "unknown")
            << "\n";
  if (rev.witness_relator) {
    std::cout << "witness: relator " << rev.witness_relator->to_string() << " has reverse "
              << rev.witness_reverse->to_string() << " = " << G.label(r.evaluate(*rev.witness_reverse))
              << " != 1\n";
  }
  return kOk;
}

int cmd_orbit(const Config& cfg, const std::string& builtin_name, std::vector<std::string> positional,
              const std::string& graph, bool self_loops) {
  std::string source, factors;
  if (!builtin_name.empty()) {
    if (positional.size() != 1) throw UsageError("orbit --builtin NAME expects one factorization argument");
    factors = positional[0];
  } else {
    if (positional.size() != 2) throw UsageError("orbit expects a presentation and a factorization");
    source = positional[0];
    factors = positional[1];
  }
  GroupPtr G = load_group(builtin_name, source, cfg);
  Factorization f = parse_factorization(G, factors);
  Orbit o = orbit(f, cfg.node_cap);
  OrbitSize size{o.size(), o.capped()};
  if (!graph.empty()) {
    if (o.capped()) {
      std::cerr << "orbit capped at " << o.size() << " members; no graph written\n";
      return kInconclusive;
    }
    std::cout << export_orbit_graph(o, graph == "json" ? GraphFormat::Json : GraphFormat::Dot, self_loops) << "\n";
    return kOk;
  }
  if (cfg.format == "json") {
    json j;
    j["factorization"] = f.to_string();
    j["size"] = size.value;
    j["capped"] = size.capped;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "factorization: " << f.to_string() << "\n";
    std::cout << "orbit size: " << size.to_string() << "\n";
  }
  return size.capped ? inconclusive_exit(cfg) : kOk;
}

int cmd_check(const Config& cfg, const std::string& theorem, SuiteOptions o) {
  auto t = theorem_from_string(theorem);
  if (!t) throw UsageError("unknown theorem '" + theorem + "'");
  o.seed = cfg.seed;
  o.node_cap = cfg.node_cap;
  o.coset_cap = cfg.coset_cap;
  SuiteResult r = run_suite(*t, o);
  if (cfg.format == "json") {
    json j;
    j["theorem"] = to_string(*t);
    j["refused"] = r.refused;
    if (r.refused) j["refusal"] = r.refusal;
    j["checked"] = r.checked;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["inconclusive"] = r.inconclusive;
    j["failures"] = r.failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.summary() << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  if (r.refused) return kUsage;
  if (r.failed) return kFailure;
  if (r.inconclusive) return inconclusive_exit(cfg);
  return kOk;
}

int cmd_scan(const Config& cfg, std::size_t max_len) {
  if (max_len < 1) throw UsageError("--max-len must be at least 1");
  GroupPtr G = cayley_group(realize_or_throw(g6(), cfg), "g6");
  ScanReport r = conjecture_scan(G, max_len, cfg.node_cap);
  if (cfg.format == "json") {
    std::cout << r.to_json() << "\n";
  } else {
    std::cout << r.to_csv();
  }
  std::cerr << r.summary() << "\n";
  return r.inconclusive_count() ? inconclusive_exit(cfg) : kOk;
}

int cmd_reversible(const Config& cfg, const std::string& builtin_name, const std::string& source) {
  Presentation p = load_presentation(builtin_name, source);
  Enumeration e = enumerate(p, cfg.coset_cap);
  auto rev = check_reversible(p, e);
  auto shape = reversible_by_shape(p);
  if (cfg.format == "json") {
    json j;
    j["presentation"] = p.to_string();
    j["status"] = to_string(rev.status);
    j["shape_shortcut"] = shape;
    j["cap_hit"] = rev.cap_hit;
    if (rev.witness_relator) {
      j["witness_relator"] = rev.witness_relator->to_string();
      j["witness_reverse"] = rev.witness_reverse->to_string();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "reversible: " << to_string(rev.status) << "\n";
    std::cout << "shape shortcut: " << (shape ? "every relator has a reversible shape" : "not applicable") << "\n";
    if (rev.witness_relator) {
      std::cout << "witness: relator " << rev.witness_relator->to_string() << " has reverse "
                << rev.witness_reverse->to_string() << "\n";
    }
    if (rev.cap_hit) std::cout << "coset enumeration capped at " << cfg.coset_cap << "\n";
  }
  return rev.status == Reversibility::Unknown ? inconclusive_exit(cfg) : kOk;
}

int cmd_double_reverse(const Config& cfg, const std::string& builtin_name, std::vector<std::string> positional) {
  std::string source, tuple;
  if (!builtin_name.empty()) {
    if (positional.size() != 1) throw UsageError("double-reverse --builtin NAME expects one word tuple");
    tuple = positional[0];
  } else {
    if (positional.size() != 2) throw UsageError("double-reverse expects a presentation and a word tuple");
    source = positional[0];
    tuple = positional[1];
  }
  Presentation p = load_presentation(builtin_name, source);
  CayleyRealization r = realize_or_throw(p, cfg);
  auto status = check_reversible(p, r).status;
  GroupPtr G = cayley_group(std::move(r), builtin_name);
  WordTuple u = parse_word_tuple(p.alphabet, tuple);
  EqualityReport rep = check_equality(evaluate(G, u), Transform::double_reverse(u, status), cfg.node_cap);
  if (cfg.format == "json") {
    json j = json::parse(rep.to_json());
    j["words"] = u.to_string();
    j["double_reverse"] = double_reverse(u).to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "tuple: " << u.to_string() << "\n";
    std::cout << "double reverse: " << double_reverse(u).to_string() << "\n";
    std::cout << "orbit sizes: " << rep.size_left.to_string() << " vs " << rep.size_right.to_string() << "\n";
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
    std::cout << "guaranteed: "
              << (rep.guaranteed ? "yes" : "no (presentation does not have reversible relations)") << "\n";
  }
  return rep.verdict == Verdict::Inconclusive ? inconclusive_exit(cfg) : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz orbits of factorizations in finitely presented groups"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--node-cap", cfg.node_cap, "Maximum orbit members to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--coset-cap", cfg.coset_cap, "Maximum live cosets during enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_flag("--strict", cfg.strict, "Treat capped results as failures");

  std::string builtin_name, source, export_path, graph, theorem;
  std::vector<std::string> positional;
  bool self_loops = false;
  std::size_t max_len = 4;
  SuiteOptions suite;
  std::vector<std::string> check_builtins;

  auto* realize_cmd = app.add_subcommand("realize", "Realize a presentation by coset enumeration");
  realize_cmd->add_option("--builtin", builtin_name, "Built-in presentation, e.g. g4, dihedral-rs:6");
  realize_cmd->add_option("presentation", source, "Presentation text or file");
  realize_cmd->add_option("--export", export_path, "Write the realization as JSON");

  auto* orbit_cmd = app.add_subcommand("orbit", "Hurwitz orbit of a factorization");
  orbit_cmd->add_option("--builtin", builtin_name, "Built-in presentation or sN");
  orbit_cmd->add_option("args", positional, "[presentation] factorization");
  orbit_cmd->add_option("--graph", graph, "Emit the orbit graph")->check(CLI::IsMember({"dot", "json"}));
  orbit_cmd->add_flag("--self-loops", self_loops, "Keep moves that fix a member");

  auto* check_cmd = app.add_subcommand("check", "Run a randomized property suite");
  check_cmd->add_option("theorem", theorem, "pair-swap, pair-inverse, cycle, flip-inverse, conjugate, "
                                            "involution-reverse, double-reverse, closed-form, mirror-moves")
      ->required();
  check_cmd->add_option("--samples", suite.samples, "Samples per group")->check(CLI::PositiveNumber);
  check_cmd->add_option("--range", suite.range, "Exponent bound for closed-form")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--min-length", suite.min_length, "Shortest factorization")->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-length", suite.max_length, "Longest factorization")->check(CLI::PositiveNumber);
  check_cmd->add_option("--builtin", check_builtins, "Presentations for double-reverse and mirror-moves");

  auto* scan_cmd = app.add_subcommand("scan-g6", "Orbit sizes of all arrangements over {a, b, a^-1} in G6");
  scan_cmd->add_option("--max-len", max_len, "Longest tuple")->check(CLI::PositiveNumber);

  auto* rev_cmd = app.add_subcommand("reversible", "Decide whether a presentation has reversible relations");
  rev_cmd->add_option("--builtin", builtin_name, "Built-in presentation");
  rev_cmd->add_option("presentation", source, "Presentation text or file");

  auto* dr_cmd = app.add_subcommand("double-reverse", "Compare a word tuple with its double reverse");
  dr_cmd->add_option("--builtin", builtin_name, "Built-in presentation");
  dr_cmd->add_option("args", positional, "[presentation] comma-separated words");

  for (auto* sub : {realize_cmd, orbit_cmd, check_cmd, scan_cmd, rev_cmd, dr_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*realize_cmd) return cmd_realize(cfg, builtin_name, source, export_path);
    if (*orbit_cmd) return cmd_orbit(cfg, builtin_name, positional, graph, self_loops);
    if (*check_cmd) {
      suite.presentations = check_builtins;
      if (suite.min_length > suite.max_length) throw UsageError("--min-length exceeds --max-length");
      return cmd_check(cfg, theorem, suite);
    }
    if (*scan_cmd) return cmd_scan(cfg, max_len);
    if (*rev_cmd) return cmd_reversible(cfg, builtin_name, source);
    if (*dr_cmd) return cmd_double_reverse(cfg, builtin_name, positional);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
