// Command-line front end. Links only the C interface.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepchoose/sepchoose.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct CliError {
  int exit_code;
  std::string message;
};

// Owns a string returned by the library.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { sc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

int exit_for(sc_status s) {
  switch (s) {
    case SC_OK:
      return kExitPass;
    case SC_BUDGET:
      return kExitUnknown;
    case SC_NO_COLORING:
      return kExitRefuted;
    default:
      return kExitUsage;
  }
}

void check(sc_status s) {
  if (s != SC_OK) throw CliError{exit_for(s), std::string(sc_status_name(s)) + ": " + sc_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError{kExitUsage, "cannot write " + path};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw CliError{kExitUsage, "failed writing " + path};
}

struct GraphHandle {
  sc_graph* g = nullptr;
  ~GraphHandle() { sc_graph_free(g); }
};

struct ListsHandle {
  sc_lists* l = nullptr;
  ~ListsHandle() { sc_lists_free(l); }
};

struct CertHandle {
  sc_certificate* c = nullptr;
  ~CertHandle() { sc_certificate_free(c); }
};

struct Options {
  std::optional<int> n, a, b, c, k, alpha, p;
  std::string variant, endpoints, graph, lists, out, strategy = "exact";
  bool free = false;
  bool json = false;
  bool glue = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::optional<int> precolored;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw CliError{kExitUsage, std::string("missing required flag --") + flag};
  return *v;
}

// Loads --graph if given, else builds C_n from --n.
void load_graph(const Options& o, GraphHandle& h) {
  if (!o.graph.empty()) {
    check(sc_graph_from_json(read_file(o.graph).c_str(), &h.g));
  } else if (o.n) {
    check(sc_graph_cycle(*o.n, &h.g));
  } else {
    throw CliError{kExitUsage, "give --graph <file> or --n <cycle length>"};
  }
}

void print_formula(const Options& o, int value, const std::string& regime) {
  if (o.json) {
    std::cout << nlohmann::json{{"value", value}, {"regime", regime}}.dump() << '\n';
  } else {
    std::cout << value << " (regime: " << regime << ")\n";
  }
}

int cmd_formula(const std::string& kind, const Options& o) {
  int value = 0;
  OwnedString regime;
  if (kind == "sep-cycle") {
    check(sc_sep_cycle(need(o.n, "n"), need(o.a, "a"), need(o.b, "b"), &value, &regime.p));
  } else if (kind == "fsep-cycle") {
    check(sc_fsep_cycle(need(o.n, "n"), need(o.a, "a"), need(o.b, "b"), &value, &regime.p));
  } else if (kind == "min-c3") {
    check(sc_fsep_min_with_triangle(need(o.n, "n"), need(o.a, "a"), need(o.b, "b"), &value, &regime.p));
  } else if (kind == "fsep-cactus") {
    GraphHandle g;
    if (o.graph.empty()) throw CliError{kExitUsage, "fsep-cactus needs --graph <file>"};
    load_graph(o, g);
    check(sc_fsep_cactus(g.g, need(o.a, "a"), need(o.b, "b"), &value, &regime.p));
  } else if (kind == "outer-bounds") {
    int lower = 0, upper = 0;
    check(sc_fsep_outerplanar_bounds(need(o.n, "g"), need(o.a, "a"), need(o.b, "b"), &lower, &upper));
    if (o.json) {
      std::cout << nlohmann::json{{"lower", lower}, {"upper", upper}, {"exact", lower == upper}}.dump() << '\n';
    } else {
      std::cout << lower << " <= fsep <= " << upper << (lower == upper ? " (exact)" : "") << '\n';
    }
    return kExitPass;
  } else if (kind == "c-threshold") {
    long long num = 0, den = 1, fl = 0;
    check(sc_c_threshold(need(o.n, "n"), need(o.a, "a"), need(o.b, "b"), &num, &den, &fl, &regime.p));
    if (o.json) {
      std::cout << nlohmann::json{{"numerator", num}, {"denominator", den}, {"floor", fl}, {"regime", regime.str()}}.dump()
                << '\n';
    } else {
      std::cout << num << '/' << den << " floor " << fl << " (regime: " << regime.str() << ")\n";
    }
    return kExitPass;
  } else {
    throw CliError{kExitUsage, "unknown formula '" + kind +
                                   "' (expected sep-cycle, fsep-cycle, fsep-cactus, outer-bounds, min-c3 or c-threshold)"};
  }
  print_formula(o, value, regime.str());
  return kExitPass;
}

int cmd_solve(const std::string& mode, const Options& o) {
  GraphHandle g;
  load_graph(o, g);
  if (mode == "check") {
    if (o.lists.empty()) throw CliError{kExitUsage, "solve check needs --lists <file>"};
    ListsHandle l;
    check(sc_lists_from_json(g.g, read_file(o.lists).c_str(), o.a ? *o.a : -1, &l.l));
    int colorable = 0;
    OwnedString result;
    check(sc_solve_lists(l.l, need(o.b, "b"), o.free ? 1 : 0, o.budget, &colorable, &result.p));
    std::cout << nlohmann::json::parse(result.str()).dump(2) << '\n';
    return colorable ? kExitPass : kExitRefuted;
  }
  if (mode == "sep") {
    int value = 0;
    check(sc_compute_sep(g.g, need(o.a, "a"), need(o.b, "b"), o.free ? 1 : 0, o.budget, &value));
    if (o.json) {
      std::cout << nlohmann::json{{o.free ? "fsep" : "sep", value}}.dump() << '\n';
    } else {
      std::cout << value << '\n';
    }
    return kExitPass;
  }
  if (mode == "decide") {
    int choosable = 0;
    OwnedString counter;
    check(sc_decide(g.g, need(o.a, "a"), need(o.b, "b"), need(o.c, "c"), o.free ? 1 : 0, o.budget, &choosable, &counter.p));
    nlohmann::json j{{"choosable", choosable != 0}};
    if (counter.p) j["counterexample"] = nlohmann::json::parse(counter.str());
    std::cout << j.dump(2) << '\n';
    return choosable ? kExitPass : kExitRefuted;
  }
  throw CliError{kExitUsage, "unknown solve mode '" + mode + "' (expected check, sep or decide)"};
}

int cmd_adversary(const std::string& family, const Options& o) {
  sc_adversary_params p{};
  p.n = o.n.value_or(0);
  p.a = o.a.value_or(0);
  p.b = o.b.value_or(0);
  p.k = o.k.value_or(0);
  p.alpha = o.alpha.value_or(0);
  p.p = o.p.value_or(0);
  p.variant = o.variant.c_str();
  p.endpoints = o.endpoints.c_str();
  p.glue = o.glue ? 1 : 0;
  CertHandle cert;
  check(sc_adversary(family.c_str(), &p, &cert.c));
  OwnedString text;
  check(sc_certificate_to_json(cert.c, &text.p));
  write_output(o.out, text.str());
  return kExitPass;
}

int cmd_color(const Options& o) {
  GraphHandle g;
  load_graph(o, g);
  if (o.lists.empty()) throw CliError{kExitUsage, "color needs --lists <file>"};
  ListsHandle l;
  check(sc_lists_from_json(g.g, read_file(o.lists).c_str(), o.a ? *o.a : -1, &l.l));
  OwnedString result;
  check(sc_color(l.l, o.strategy.c_str(), need(o.b, "b"), o.k.value_or(0), &result.p));
  write_output(o.out, result.str());
  return kExitPass;
}

int cmd_sweep(const Options& o) {
  OwnedString csv;
  int rows = 0, verified = 0, mismatches = 0;
  check(sc_sweep(need(o.n, "n"), need(o.a, "a"), need(o.b, "b"), o.budget, o.workers, &csv.p, &rows, &verified, &mismatches));
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    write_output(o.out, csv.str());
  }
  std::cerr << "rows=" << rows << " verified=" << verified << " mismatches=" << mismatches << '\n';
  return mismatches == 0 ? kExitPass : kExitRefuted;
}

int cmd_verify(const std::string& file, const Options& o) {
  CertHandle cert;
  check(sc_certificate_from_json(read_file(file).c_str(), &cert.c));
  int status = 0;
  OwnedString message;
  check(sc_certificate_verify(cert.c, o.budget, &status, &message.p));
  const char* label = status == 0 ? "PASS" : status == 1 ? "REFUTED" : "UNKNOWN";
  std::cout << label << ": " << message.str() << '\n';
  return status == 0 ? kExitPass : status == 1 ? kExitRefuted : kExitUnknown;
}

int cmd_random_lists(const Options& o) {
  GraphHandle g;
  load_graph(o, g);
  ListsHandle l;
  int pre = o.precolored.value_or(-1);
  check(sc_lists_random(g.g, need(o.a, "a"), need(o.c, "c"), o.seed, pre, pre >= 0 ? need(o.b, "b") : 0, &l.l));
  OwnedString text;
  check(sc_lists_to_json(l.l, &text.p));
  write_output(o.out, text.str());
  return kExitPass;
}

void add_int(CLI::App* app, const std::string& name, std::optional<int>& target, const std::string& help) {
  app->add_option(name, target, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation numbers of list colorings: closed forms, exact search, certificates."};
  app.require_subcommand(1);
  Options o;
  std::string kind, mode, family, file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search node budget (0 = default, SEPCHOOSE_BUDGET overrides the default)");
    sub->add_flag("--json", o.json, "Structured output");
  };

  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("kind", kind, "sep-cycle | fsep-cycle | fsep-cactus | outer-bounds | min-c3 | c-threshold")->required();
  add_int(formula, "--n,--g", o.n, "Cycle length or girth");
  add_int(formula, "--a", o.a, "List size");
  add_int(formula, "--b", o.b, "Colors per vertex");
  formula->add_option("--graph", o.graph, "Graph JSON file");
  common(formula);

  auto* solve = app.add_subcommand("solve", "Exact search");
  solve->add_option("mode", mode, "check | sep | decide")->required();
  add_int(solve, "--n", o.n, "Cycle length (when no --graph)");
  add_int(solve, "--a", o.a, "List size");
  add_int(solve, "--b", o.b, "Colors per vertex");
  add_int(solve, "--c", o.c, "Separation cap (decide)");
  solve->add_option("--graph", o.graph, "Graph JSON file");
  solve->add_option("--lists", o.lists, "List assignment JSON file (check)");
  solve->add_flag("--free", o.free, "Free variant (one precolored vertex)");
  common(solve);

  auto* adversary = app.add_subcommand("adversary", "Write an uncolorable certificate");
  adversary->add_option("family", family, "small-ratio | odd-cycle | path | c3 | flower | fig1")->required();
  add_int(adversary, "--n", o.n, "Cycle or path parameter n");
  add_int(adversary, "--a", o.a, "List size");
  add_int(adversary, "--b", o.b, "Colors per vertex");
  add_int(adversary, "--k", o.k, "Excess k (small-ratio)");
  add_int(adversary, "--alpha", o.alpha, "alpha (odd-cycle)");
  add_int(adversary, "--p", o.p, "p (odd-cycle: C_{2p+1}; flower: petal length)");
  adversary->add_option("--variant", o.variant, "path: case1|case2a|case2b; c3: case1|case2_high|case2_low");
  adversary->add_option("--endpoints", o.endpoints, "path: equal|disjoint");
  adversary->add_flag("--glue", o.glue, "path: identify the end vertices into a cycle");
  adversary->add_option("--out", o.out, "Output file (default stdout)");
  common(adversary);

  auto* color = app.add_subcommand("color", "Run a constructive colorer");
  color->add_option("--strategy", o.strategy, "greedy | lift | path | cycle | cactus | outerplanar | exact");
  color->add_option("--graph", o.graph, "Graph JSON file");
  add_int(color, "--n", o.n, "Cycle length (when no --graph)");
  color->add_option("--lists", o.lists, "List assignment JSON file")->required();
  add_int(color, "--a", o.a, "List size");
  add_int(color, "--b", o.b, "Colors per vertex");
  add_int(color, "--k", o.k, "Lift amount (lift)");
  color->add_option("--out", o.out, "Output file (default stdout)");
  common(color);

  auto* sweep = app.add_subcommand("sweep", "Formula versus exact search over cycles");
  add_int(sweep, "--n", o.n, "Largest cycle length");
  add_int(sweep, "--a", o.a, "Largest list size");
  add_int(sweep, "--b", o.b, "Largest b");
  sweep->add_option("--workers", o.workers, "Rows computed in parallel");
  sweep->add_option("--out", o.out, "CSV output file (default stdout)");
  common(sweep);

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("file", file, "Certificate JSON")->required();
  common(verify);

  auto* random = app.add_subcommand("random-lists", "Random c-separating list assignment");
  random->add_option("--graph", o.graph, "Graph JSON file");
  add_int(random, "--n", o.n, "Cycle length (when no --graph)");
  add_int(random, "--a", o.a, "List size");
  add_int(random, "--b", o.b, "Precolored list size");
  add_int(random, "--c", o.c, "Separation cap");
  random->add_option("--precolored", o.precolored, "Precolored vertex");
  random->add_option("--seed", o.seed, "Random seed");
  random->add_option("--out", o.out, "Output file (default stdout)");
  common(random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*formula) return cmd_formula(kind, o);
    if (*solve) return cmd_solve(mode, o);
    if (*adversary) return cmd_adversary(family, o);
    if (*color) return cmd_color(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(file, o);
    if (*random) return cmd_random_lists(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
