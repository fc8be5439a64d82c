#include "htcover/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "htcover/cli/document.hpp"
#include "htcover/error.hpp"

namespace htcover::cli {

namespace {

struct Options {
  std::string graph_path;
  std::string input_path;
  std::string out_path;
  int n = 1;
  int t = 1;
  int horizon = 1;
  std::string mode = "brute";
  std::string rule = "literal";
  std::string algorithm = "incremental";
  std::string family;
  int parameter = 0;
  std::optional<std::size_t> max_vertices;
  std::optional<std::uint64_t> max_generators;
  std::optional<std::uint64_t> max_search_nodes;
  std::optional<int> oracle_max_n;
};

std::uint64_t env_number(const CliContext& ctx, const std::string& key) {
  const std::string& text = ctx.env.at(key);
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(key + " must be a non-negative integer, got \"" + text + "\"");
  }
}

TheoremBudget resolve_budget(const Options& o, const CliContext& ctx) {
  TheoremBudget b;
  if (ctx.env.count("HTCOVER_MAX_VERTICES")) b.limits.max_vertices = env_number(ctx, "HTCOVER_MAX_VERTICES");
  if (ctx.env.count("HTCOVER_MAX_GENERATORS")) b.max_generators = env_number(ctx, "HTCOVER_MAX_GENERATORS");
  if (ctx.env.count("HTCOVER_MAX_SEARCH_NODES")) {
    b.limits.max_search_nodes = env_number(ctx, "HTCOVER_MAX_SEARCH_NODES");
  }
  std::optional<int> oracle;
  if (ctx.env.count("HTCOVER_ORACLE_MAX_N")) oracle = static_cast<int>(env_number(ctx, "HTCOVER_ORACLE_MAX_N"));
  if (o.max_vertices) b.limits.max_vertices = *o.max_vertices;
  if (o.max_generators) b.max_generators = *o.max_generators;
  if (o.max_search_nodes) b.limits.max_search_nodes = *o.max_search_nodes;
  if (o.oracle_max_n) oracle = o.oracle_max_n;
  if (oracle) b.max_n_t_upto_2 = b.max_n_t3 = b.max_n_larger_t = *oracle;
  b.decompose.algorithm = o.algorithm == "splitting" ? DecomposeOptions::Algorithm::kSplitting
                                                     : DecomposeOptions::Algorithm::kIncremental;
  return b;
}

Json budget_json(const TheoremBudget& b) {
  Json j;
  j["max_vertices"] = b.limits.max_vertices;
  j["max_generators"] = b.max_generators;
  j["max_search_nodes"] = b.limits.max_search_nodes;
  return j;
}

std::string read_text(const std::string& path, CliContext& ctx) {
  std::ostringstream buf;
  if (path == "-") {
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  buf << f.rdbuf();
  if (f.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_text(const std::string& text, const Options& o, CliContext& ctx) {
  if (o.out_path.empty()) {
    ctx.out << text;
    ctx.out.flush();
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + o.out_path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("cannot write " + o.out_path);
}

Graph load_graph(const Options& o, CliContext& ctx, const TheoremBudget& b) {
  if (o.graph_path.empty()) throw ContractError("--graph is required");
  Graph g = parse_graph_document(read_text(o.graph_path, ctx)).to_graph();
  check_capacity(g, b.limits);
  return g;
}

MonomialIdeal power_of_cover_ideal(const Graph& g, int n, const TheoremBudget& b) {
  const MonomialIdeal j = cover_ideal(g, b.limits);
  return n == 1 ? j : bounded_power(j, n, b.max_generators);
}

int require_ht(const Graph& g) {
  const auto t = recognize_ht(g);
  if (!t) throw ContractError("the closed form is defined only for H_t graph documents");
  return *t;
}

ClusterRule parse_rule(const std::string& s) { return s == "lifted" ? ClusterRule::kLifted : ClusterRule::kLiteral; }

int emit(ReportDocument doc, const Options& o, CliContext& ctx, bool complete = true) {
  write_text(serialize(doc), o, ctx);
  return complete ? kExitOk : kExitCapacity;
}

int cmd_generate(const Options& o, CliContext& ctx) {
  Graph g;
  if (o.family == "ht") {
    if (o.parameter < 1) throw ContractError("ht requires t >= 1");
    g = build_ht(o.parameter);
  } else {
    if (o.parameter < 3 || o.parameter % 2 == 0) throw ContractError("odd-cycle requires an odd length >= 3");
    g = build_odd_cycle(o.parameter);
  }
  write_text(serialize(GraphDocument::from_graph(g)), o, ctx);
  return kExitOk;
}

int cmd_cover_ideal(const Options& o, CliContext& ctx) {
  const TheoremBudget b = resolve_budget(o, ctx);
  const Graph g = load_graph(o, ctx, b);
  ReportDocument doc;
  doc.command = "cover-ideal";
  doc.parameters = {{"graph", g.label()}, {"limits", budget_json(b)}};
  doc.result = {{"ideal", ideal_to_json(cover_ideal(g, b.limits))}};
  return emit(doc, o, ctx);
}

int cmd_power(const Options& o, CliContext& ctx) {
  const TheoremBudget b = resolve_budget(o, ctx);
  const Graph g = load_graph(o, ctx, b);
  if (o.n < 1) throw ContractError("--n must be >= 1");
  ReportDocument doc;
  doc.command = "power";
  doc.parameters = {{"graph", g.label()}, {"n", o.n}, {"limits", budget_json(b)}};
  doc.result = {{"ideal", ideal_to_json(power_of_cover_ideal(g, o.n, b))}};
  return emit(doc, o, ctx);
}

int cmd_decompose(const Options& o, CliContext& ctx) {
  const TheoremBudget b = resolve_budget(o, ctx);
  const Graph g = load_graph(o, ctx, b);
  if (o.n < 1) throw ContractError("--n must be >= 1");
  ReportDocument doc;
  doc.command = "decompose";
  doc.parameters = {{"graph", g.label()}, {"n", o.n}, {"mode", o.mode}};
  if (o.mode != "brute") doc.parameters["rule"] = o.rule;
  doc.parameters["limits"] = budget_json(b);

  if (o.mode == "brute") {
    doc.parameters["algorithm"] = o.algorithm;
    const auto comps = irredundant_decomposition(power_of_cover_ideal(g, o.n, b), b.decompose);
    const auto ass = supports_of(comps);
    doc.result = {{"ring", g.ring()->variables()},
                  {"count", comps.size()},
                  {"components", components_to_json(comps)},
                  {"ass_count", ass.size()},
                  {"ass", supports_to_json(*g.ring(), ass)}};
    return emit(doc, o, ctx);
  }
  const int t = require_ht(g);
  if (o.mode == "closed-form") {
    Json r = closed_form_to_json(closed_form_power_decomposition(t, o.n, parse_rule(o.rule)));
    doc.result = {{"ring", g.ring()->variables()}};
    doc.result.update(r);
    return emit(doc, o, ctx);
  }
  const DecompositionReport rep = verify_decomposition(t, o.n, parse_rule(o.rule), b);
  doc.result = decomposition_report_to_json(rep);
  return emit(doc, o, ctx, rep.complete);
}

int cmd_ass(const Options& o, CliContext& ctx) {
  const TheoremBudget b = resolve_budget(o, ctx);
  const Graph g = load_graph(o, ctx, b);
  if (o.n < 1) throw ContractError("--n must be >= 1");
  const auto ass = associated_primes(power_of_cover_ideal(g, o.n, b), b.decompose);
  ReportDocument doc;
  doc.command = "ass";
  doc.parameters = {{"graph", g.label()}, {"n", o.n}, {"limits", budget_json(b)}};
  doc.result = {{"count", ass.size()}, {"primes", supports_to_json(*g.ring(), ass)}};
  return emit(doc, o, ctx);
}

int cmd_scan(const Options& o, CliContext& ctx) {
  const TheoremBudget b = resolve_budget(o, ctx);
  const Graph g = load_graph(o, ctx, b);
  const StabilizationReport rep = stabilization_scan(g, o.horizon, b);
  if (!rep.complete) ctx.err << "htcover: " << rep.note << "\n";
  ReportDocument doc;
  doc.command = "scan";
  doc.parameters = {{"graph", g.label()}, {"horizon", o.horizon}, {"limits", budget_json(b)}};
  doc.result = stabilization_report_to_json(rep, *g.ring());
  return emit(doc, o, ctx, rep.complete);
}

int cmd_verify_theorem(const Options& o, CliContext& ctx) {
  const TheoremBudget b = resolve_budget(o, ctx);
  const Graph g = build_ht(o.t);
  check_capacity(g, b.limits);
  const DecompositionReport rep = verify_decomposition(o.t, o.n, parse_rule(o.rule), b);
  ReportDocument doc;
  doc.command = "verify-theorem";
  doc.parameters = {{"t", o.t}, {"n", o.n}, {"rule", o.rule}, {"limits", budget_json(b)}};
  doc.result = {{"decomposition", decomposition_report_to_json(rep)}};

  const auto predicted = classify_ass_closed_form(o.t, o.n);
  Json ass = {{"closed_form_count", predicted.size()}};
  bool complete = rep.complete;
  if (b.allows_bruteforce(o.t, o.n) && rep.complete) {
    try {
      const auto brute = associated_primes(power_of_cover_ideal(g, o.n, b), b.decompose);
      ass["bruteforce_count"] = brute.size();
      ass["matches"] = brute == predicted;
      doc.result["min_generator_containment"] = verify_min_generator_containment(o.t, o.n, b);
    } catch (const CapacityError& e) {
      complete = false;
      ctx.err << "htcover: " << e.what() << "\n";
    }
  }
  doc.result["ass"] = ass;
  return emit(doc, o, ctx, complete);
}

int cmd_export(const Options& o, CliContext& ctx) {
  std::optional<MonomialIdeal> ideal;
  if (!o.input_path.empty()) {
    const ReportDocument doc = parse_report_document(read_text(o.input_path, ctx));
    if (!doc.result.contains("ideal")) throw ParseError("report has no ideal payload to export");
    ideal = ideal_from_json(doc.result["ideal"]);
  } else {
    const TheoremBudget b = resolve_budget(o, ctx);
    ideal = power_of_cover_ideal(load_graph(o, ctx, b), o.n, b);
  }
  write_text(export_text(*ideal), o, ctx);
  return kExitOk;
}

void add_limit_flags(CLI::App* c, Options& o) {
  c->add_option("--max-vertices", o.max_vertices, "Vertex cap for exhaustive enumeration");
  c->add_option("--max-generators", o.max_generators, "Generator cap for ideal powers");
  c->add_option("--max-search-nodes", o.max_search_nodes, "Node cap for backtracking searches");
  c->add_option("--out", o.out_path, "Write the document to FILE instead of standard output");
}

}  // namespace

std::map<std::string, std::string> capture_environment() {
  std::map<std::string, std::string> env;
  for (const std::string& key : kEnvironmentKeys) {
    if (const char* v = std::getenv(key.c_str())) env[key] = v;
  }
  return env;
}

int run(const std::vector<std::string>& args, CliContext& ctx) {
  Options o;
  CLI::App app{"Cover ideals of H_t graphs: powers, decompositions, associated primes"};
  app.name(args.empty() ? "htcover" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  auto* gen = app.add_subcommand("generate", "Emit a graph document");
  gen->add_option("family", o.family, "ht or odd-cycle")->required()->check(CLI::IsMember({"ht", "odd-cycle"}));
  gen->add_option("parameter", o.parameter, "t for ht, length for odd-cycle")->required();
  gen->add_option("--out", o.out_path, "Write the document to FILE instead of standard output");

  auto graph_cmd = [&](const char* name, const char* help, bool with_n) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--graph", o.graph_path, "Graph document, or - for standard input")->required();
    if (with_n) c->add_option("--n", o.n, "Power of the cover ideal")->required();
    add_limit_flags(c, o);
    return c;
  };
  auto* cover = graph_cmd("cover-ideal", "Minimal generators of the cover ideal", false);
  auto* pow = graph_cmd("power", "Minimal generators of the n-th power of the cover ideal", true);
  auto* dec = graph_cmd("decompose", "Irreducible decomposition of the n-th power", true);
  dec->add_option("--mode", o.mode, "brute, closed-form or verify")
      ->check(CLI::IsMember({"brute", "closed-form", "verify"}));
  dec->add_option("--rule", o.rule, "Cluster family rule: literal or lifted")
      ->check(CLI::IsMember({"literal", "lifted"}));
  dec->add_option("--algorithm", o.algorithm, "incremental or splitting")
      ->check(CLI::IsMember({"incremental", "splitting"}));
  dec->add_option("--oracle-max-n", o.oracle_max_n, "Largest n checked by brute force in verify mode");
  auto* ass = graph_cmd("ass", "Associated primes of the n-th power", true);
  auto* scan = graph_cmd("scan", "Associated primes for n = 1..horizon", false);
  scan->add_option("--horizon", o.horizon, "Largest power scanned")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-theorem", "Check the closed form for H_t against brute force");
  verify->add_option("--t", o.t, "Graph parameter t")->required()->check(CLI::PositiveNumber);
  verify->add_option("--n", o.n, "Power")->required()->check(CLI::PositiveNumber);
  verify->add_option("--rule", o.rule, "Cluster family rule: literal or lifted")
      ->check(CLI::IsMember({"literal", "lifted"}));
  verify->add_option("--oracle-max-n", o.oracle_max_n, "Largest n checked by brute force");
  add_limit_flags(verify, o);

  auto* exp = app.add_subcommand("export", "Plain-text ideal for external algebra systems");
  auto* input = exp->add_option("--input", o.input_path, "Report document holding an ideal payload");
  exp->add_option("--graph", o.graph_path, "Graph document; exports the n-th power of its cover ideal")
      ->excludes(input);
  exp->add_option("--n", o.n, "Power (with --graph)")->check(CLI::PositiveNumber);
  add_limit_flags(exp, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, ctx.out, ctx.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(o, ctx);
    if (*cover) return cmd_cover_ideal(o, ctx);
    if (*pow) return cmd_power(o, ctx);
    if (*dec) return cmd_decompose(o, ctx);
    if (*ass) return cmd_ass(o, ctx);
    if (*scan) return cmd_scan(o, ctx);
    if (*verify) return cmd_verify_theorem(o, ctx);
    if (*exp) {
      if (o.input_path.empty() && o.graph_path.empty()) throw ContractError("export needs --input or --graph");
      return cmd_export(o, ctx);
    }
  } catch (const ParseError& e) {
    ctx.err << "htcover: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ContractError& e) {
    ctx.err << "htcover: invalid request: " << e.what() << "\n";
    return kExitContract;
  } catch (const CapacityError& e) {
    ctx.err << "htcover: capacity exhausted: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const IoError& e) {
    ctx.err << "htcover: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace htcover::cli
