// flagdeg: orbits on (Gr x Gr x partial flags) and on pairs of partial
// flags. Enumeration, Hasse diagrams, comparisons, move chains and oracle
// self-checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flagdeg/checks.hpp"
#include "flagdeg/io.hpp"
#include "flagdeg/oracle.hpp"
#include "flagdeg/order.hpp"

using namespace flagdeg;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailure = 1;  // infeasible input, incomparable chain endpoints
constexpr int kUsage = 2;    // parse errors, unsupported requests
constexpr int kMismatch = 3; // order disagreement, oracle mismatch

struct UsageError : Error {
  using Error::Error;
};
struct Infeasible : Error {
  using Error::Error;
};
struct Mismatch : Error {
  using Error::Error;
};

DimVector read_dv(const std::string& text, const std::string& type) {
  DimVector dv;
  try {
    dv = parse_dim_vector(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (!type.empty()) {
    bool want_a = type == "A" || type == "a";
    bool want_d = type == "D" || type == "d";
    if (!want_a && !want_d) throw UsageError("--type must be A or D");
    if (want_a != dv.shape().is_a()) {
      throw UsageError("dimension vector '" + text + "' does not have type " + type);
    }
  }
  if (auto defect = dv.defect()) throw Infeasible("invalid dimension vector " + text + ": " + *defect);
  return dv;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FlagObject read_object(const std::string& path) {
  try {
    return object_from_json(read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// --- enumerate ------------------------------------------------------------

int cmd_enumerate(const std::string& dv_text, const std::string& type, const std::string& format) {
  auto dv = read_dv(dv_text, type);
  auto objects = enumerate_objects(dv);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& f : objects) list.push_back(to_json(f)["summands"]);
    Json out{{"shape", to_json(dv.shape())}, {"dv", to_string(dv)}, {"objects", list},
             {"count", objects.size()}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t x = 0; x < objects.size(); ++x) std::cout << x << "\t" << to_string(objects[x]) << "\n";
  std::cout << "count " << objects.size() << "\n";
  return kOk;
}

// --- hasse ----------------------------------------------------------------

int cmd_hasse(const std::string& dv_text, const std::string& type, const std::string& order,
              const std::string& format, bool reduce) {
  auto dv = read_dv(dv_text, type);
  OrbitPoset poset;
  HasseDiagram h;
  if (order == "rank") {
    poset = rank_poset(dv);
    h = cover_graph(poset);
  } else if (order == "move" || order == "weak") {
    if (order == "weak" && dv.shape().is_a()) throw UsageError("the weak order is defined for type D only");
    poset = move_poset(dv);
    if (order == "weak") poset = weak_poset_from(poset);
    h = reduce ? reduced_move_graph(poset) : move_graph(poset);
  } else {
    throw UsageError("--order must be move, rank or weak");
  }
  h.poset = &poset;
  if (format == "json")
    std::cout << to_json(h).dump(2) << "\n";
  else
    std::cout << to_dot(h);
  return kOk;
}

// --- compare --------------------------------------------------------------

Json counterexample(const FlagObject& f, const FlagObject& g, const OrbitPoset& moves) {
  auto x = *moves.find(f);
  auto y = *moves.find(g);
  Json edges = Json::array();
  for (const auto& e : moves.edges) {
    if (e.from == x || e.from == y || e.to == x || e.to == y) {
      edges.push_back({{"from", to_string(moves.nodes[e.from])},
                       {"to", to_string(moves.nodes[e.to])},
                       {"region", to_json(e.region)}});
    }
  }
  return Json{{"left", to_json(f)},          {"right", to_json(g)},
              {"left_ranks", to_json(rank_vector(f))}, {"right_ranks", to_json(rank_vector(g))},
              {"move_edges", edges}};
}

int cmd_compare(const std::string& left, const std::string& right, const std::string& format) {
  auto f = read_object(left);
  auto g = read_object(right);
  if (f.shape() != g.shape()) throw UsageError("objects live on different quivers");
  if (!(object_dim(f) == object_dim(g))) {
    throw UsageError("dimension-vector mismatch: " + to_string(object_dim(f)) + " vs " +
                     to_string(object_dim(g)));
  }
  auto rank = rank_compare(f, g);
  auto moves = move_poset(object_dim(f));
  int x = *moves.find(f);
  int y = *moves.find(g);
  bool le = moves.relation.test(x, y);
  bool ge = moves.relation.test(y, x);
  Comparison move = le && ge ? Comparison::Equal
                    : le     ? Comparison::Less
                    : ge     ? Comparison::Greater
                             : Comparison::Incomparable;
  if (format == "json") {
    std::cout << Json{{"rank", to_string(rank)}, {"move", to_string(move)}}.dump(2) << "\n";
  } else {
    std::cout << "rank " << to_string(rank) << "\nmove " << to_string(move) << "\n";
  }
  if (rank != move) {
    std::cerr << "rank and move orders disagree; counterexample bundle:\n"
              << counterexample(f, g, moves).dump(2) << "\n";
    return kMismatch;
  }
  return kOk;
}

// --- chain ----------------------------------------------------------------

int cmd_chain(const std::string& left, const std::string& right, const std::string& format) {
  auto f = read_object(left);
  auto g = read_object(right);
  if (f.shape() != g.shape() || !(object_dim(f) == object_dim(g))) {
    throw UsageError("objects must share the quiver and the dimension vector");
  }
  if (!rank_leq(f, g)) throw Infeasible(to_string(f) + " is not below " + to_string(g) + " in the rank order");
  std::vector<ChainStep> chain;
  try {
    chain = move_chain(f, g);
  } catch (const Error& e) {
    throw Mismatch(std::string("chain construction failed: ") + e.what());
  }
  if (format == "json") {
    Json steps = Json::array();
    for (const auto& s : chain) steps.push_back({{"region", to_json(s.region)}, {"object", to_json(s.object)}});
    std::cout << Json{{"start", to_json(f)}, {"steps", steps}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "0\t" << to_string(f) << "\n";
  for (std::size_t s = 0; s < chain.size(); ++s)
    std::cout << s + 1 << "\t" << to_string(chain[s].object) << "\t<- " << to_string(chain[s].region) << "\n";
  std::cout << "reached target in " << chain.size() << " moves\n";
  return kOk;
}

// --- oracle ---------------------------------------------------------------

int cmd_oracle(OracleOptions options) {
  if (options.p < 1 || options.nmax < 0 || options.seeds < 0) throw UsageError("invalid oracle parameters");
  std::vector<SuiteResult> results;
  try {
    results = run_oracle_checks(options);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.failed ? "FAIL " : "PASS ") << r.name << ": " << r.passed << " passed, " << r.failed
              << " failed\n";
    for (const auto& offender : r.failures) std::cerr << offender.dump() << "\n";
    all = all && r.failed == 0;
  }
  return all ? kOk : kMismatch;
}

int cmd_classify(const std::string& path, const std::string& format) {
  SubspaceConfig c;
  try {
    c = config_from_json(read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  auto f = classify(c);
  if (format == "json")
    std::cout << to_json(f).dump(2) << "\n";
  else
    std::cout << to_string(f) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of GL(V) on Grassmannian pairs times partial flags, and on pairs of flags"};
  app.require_subcommand(1);

  std::string dv, type, format = "table", order = "move";
  bool reduce = false;

  auto* enumerate = app.add_subcommand("enumerate", "List all objects of a dimension vector");
  enumerate->add_option("--dv", dv, "a_1,...,a_p;k;l (type D) or a_1,...,a_p;b_1,...,b_q (type A)")->required();
  enumerate->add_option("--type", type, "A or D (inferred from --dv when omitted)");
  enumerate->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  std::string hasse_format = "dot";
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the move, rank or weak order");
  hasse->add_option("--dv", dv, "dimension vector")->required();
  hasse->add_option("--type", type, "A or D");
  hasse->add_option("--order", order, "move, rank or weak")->check(CLI::IsMember({"move", "rank", "weak"}));
  hasse->add_option("--format", hasse_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  hasse->add_flag("--reduce", reduce, "collapse parallel move edges and drop labels");

  std::string left, right;
  auto* compare = app.add_subcommand("compare", "Compare two objects in the rank and move orders");
  compare->add_option("left", left, "object JSON")->required();
  compare->add_option("right", right, "object JSON")->required();
  compare->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* chain = app.add_subcommand("chain", "Elementary moves from one object up to another");
  chain->add_option("left", left, "lower object JSON")->required();
  chain->add_option("right", right, "upper object JSON")->required();
  chain->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  OracleOptions oracle_options;
  auto* oracle = app.add_subcommand("oracle", "Cross-check formulas against exact linear algebra");
  auto* check = oracle->add_subcommand("check", "Run the oracle suites");
  oracle->require_subcommand(1);
  check->add_option("--p", oracle_options.p, "largest flag length");
  check->add_option("--nmax", oracle_options.nmax, "largest ambient dimension");
  check->add_option("--q", oracle_options.q, "prime field size");
  check->add_option("--seeds", oracle_options.seeds, "random configurations per (n,k,l)");
  check->add_option("--jobs", oracle_options.jobs, "worker threads");

  std::string config_path;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a subspace configuration");
  classify_cmd->add_option("config", config_path, "configuration JSON")->required();
  classify_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(dv, type, format);
    if (*hasse) return cmd_hasse(dv, type, order, hasse_format, reduce);
    if (*compare) return cmd_compare(left, right, format);
    if (*chain) return cmd_chain(left, right, format);
    if (*oracle) {
      oracle_options.seed = default_seed();
      return cmd_oracle(oracle_options);
    }
    if (*classify_cmd) return cmd_classify(config_path, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const Mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
