#include "cubepaths/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubepaths/boundary.hpp"
#include "cubepaths/bounds.hpp"
#include "cubepaths/compression.hpp"
#include "cubepaths/flownet.hpp"
#include "cubepaths/json_io.hpp"
#include "cubepaths/verify.hpp"

namespace cubepaths {

namespace {

Json load_json_input(const std::string& inline_json, const std::string& file) {
  if (!inline_json.empty()) return Json::parse(inline_json);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open input file: " + file);
    return Json::parse(in);
  }
  throw std::invalid_argument("provide input with --json or --input");
}

BoundaryMode parse_mode(const std::string& mode) {
  if (mode == "edge") return BoundaryMode::edge;
  if (mode == "vertex") return BoundaryMode::vertex;
  throw std::invalid_argument("mode must be edge or vertex, got: " + mode);
}

int cmd_boundary(int n, const std::string& set_json, const std::string& kind, bool directed,
                 bool list, std::ostream& out) {
  CubeSet s = member_list_from_json(Json::parse(set_json), n);
  Json result;
  result["n"] = n;
  result["kind"] = kind;
  if (kind == "edge") {
    EdgeSet b = directed ? directed_edge_boundary(s) : edge_boundary(s);
    result["directed"] = directed;
    result["size"] = b.size();
    if (list) result["edges"] = edge_set_to_json(b);
  } else if (kind == "vertex") {
    CubeSet b = directed ? directed_vertex_boundary(s) : vertex_boundary(s);
    result["directed"] = directed;
    result["size"] = b.size();
    if (list) result["vertices"] = member_list_to_json(b);
  } else if (kind == "surface") {
    CubeSet b = surface(s);
    result["size"] = b.size();
    if (list) result["vertices"] = member_list_to_json(b);
  } else if (kind == "shadow") {
    CubeSet b = lower_shadow(s);
    result["size"] = b.size();
    if (list) result["vertices"] = member_list_to_json(b);
  } else {
    throw std::invalid_argument("kind must be one of edge, vertex, surface, shadow");
  }
  out << result.dump() << "\n";
  return 0;
}

int cmd_compress(const Json& input, std::ostream& out) {
  int n = input.at("n").get<int>();
  CubeSet a = member_list_from_json(input.at("A"), n);
  CubeSet b = member_list_from_json(input.at("B"), n);
  CubeSet s = member_list_from_json(input.at("S"), n);
  BoundaryMode mode = parse_mode(input.value("mode", "edge"));
  auto [result, trace] = compress_to_down_set(s, a, b, mode);
  Json output;
  output["n"] = n;
  output["S_prime"] = member_list_to_json(result);
  output["trace"] = trace_to_json(trace);
  out << output.dump() << "\n";
  return 0;
}

int cmd_paths(const Json& input, std::ostream& out) {
  int n = input.at("n").get<int>();
  CubeSet a = member_list_from_json(input.at("A"), n);
  CubeSet b = member_list_from_json(input.at("B"), n);
  std::string mode = input.value("mode", "edge");
  bool directed = input.value("directed", false);
  PathsResult result;
  if (mode == "edge") result = edge_disjoint_paths(a, b, directed);
  else if (mode == "vertex") result = vertex_disjoint_paths(a, b, directed);
  else throw std::invalid_argument("mode must be edge or vertex, got: " + mode);
  Json output;
  output["n"] = n;
  output["mode"] = mode;
  output["directed"] = directed;
  output["count"] = result.count;
  output["paths"] = path_family_to_json(result.family);
  Json cut;
  cut["S"] = member_list_to_json(result.cut_set);
  cut["size"] = result.cut_size;
  output["cut"] = std::move(cut);
  out << output.dump() << "\n";
  return 0;
}

int cmd_bounds(const std::string& kind, int n, std::uint64_t x, std::ostream& out) {
  Json output;
  if (kind == "e") {
    double v = func_e(n, x);
    output["value"] = format_real(v);
  } else if (kind == "b" || kind == "s") {
    Rational v = kind == "b" ? func_b(n, x) : func_s(n, x);
    double approx = static_cast<double>(boost::multiprecision::numerator(v)) /
                    static_cast<double>(boost::multiprecision::denominator(v));
    output["value"] = format_real(approx);
    output["rational"] = rational_to_string(v);
  } else {
    throw std::invalid_argument("bounds kind must be e, b or s");
  }
  out << output.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& theorem, int n, bool exhaustive, std::uint64_t random_count,
               std::uint64_t seed, bool fail_fast, const std::string& out_file,
               std::ostream& out) {
  std::vector<SweepPlan> plans;
  if (theorem == "all") {
    plans = default_suite();
    for (auto& plan : plans) plan.fail_fast = fail_fast;
  } else {
    bool known = false;
    for (const auto& id : known_theorems()) known = known || id == theorem;
    if (!known) throw std::invalid_argument("unknown theorem id: " + theorem);
    SweepPlan plan;
    plan.theorem_id = theorem;
    plan.n = n;
    plan.fail_fast = fail_fast;
    if (exhaustive) {
      plan.strategy = SweepStrategy::exhaustive;
    } else {
      plan.strategy = SweepStrategy::random;
      plan.count = random_count;
      plan.seed = seed;
    }
    plans.push_back(plan);
  }

  std::ofstream cert_out;
  if (!out_file.empty()) {
    cert_out.open(out_file);
    if (!cert_out) throw std::invalid_argument("cannot open output file: " + out_file);
  }
  std::vector<Certificate> failures;

  std::uint64_t total = 0, failed = 0;
  for (const SweepPlan& plan : plans) {
    SweepSummary summary = run_theorem(plan, [&](const Certificate& cert) {
      if (cert_out.is_open()) cert_out << cert.to_json().dump() << "\n";
      if (!cert.pass) failures.push_back(cert);
    });
    total += summary.total;
    failed += summary.failures;
    out << plan.theorem_id << " n=" << plan.n << " "
        << (plan.strategy == SweepStrategy::exhaustive
                ? std::string("exhaustive")
                : "random(" + std::to_string(plan.count) + ", seed " +
                      std::to_string(plan.seed) + ")")
        << ": " << (summary.failures == 0 ? "pass" : "FAIL") << " (" << summary.total
        << " instances, " << summary.failures << " failures)\n";
    if (fail_fast && summary.failures > 0) break;
  }
  out << "total: " << total << " instances, " << failed << " failures\n";

  // A falsified statement is the most valuable output: always persist it.
  if (!failures.empty() && !cert_out.is_open()) {
    std::ofstream fail_out("failed_certificates.jsonl");
    for (const Certificate& cert : failures) fail_out << cert.to_json().dump() << "\n";
    out << "failed certificates written to failed_certificates.jsonl\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypercube boundary, compression, disjoint-path and bound toolkit"};
  app.require_subcommand(1);

  // boundary
  auto* boundary_cmd = app.add_subcommand("boundary", "boundary of a cube set");
  int b_n = 0;
  std::string b_set, b_kind = "edge";
  bool b_directed = false, b_list = false;
  boundary_cmd->add_option("--n", b_n, "dimension")->required();
  boundary_cmd->add_option("--set", b_set, "vertex list JSON")->required();
  boundary_cmd->add_option("--kind", b_kind, "edge | vertex | surface | shadow");
  boundary_cmd->add_flag("--directed", b_directed, "directed boundary");
  boundary_cmd->add_flag("--list", b_list, "include the full listing");

  // compress
  auto* compress_cmd = app.add_subcommand("compress", "compress S to a down-set between A and B^c");
  std::string c_json, c_file;
  compress_cmd->add_option("--json", c_json, "inline JSON {n, A, B, S, mode}");
  compress_cmd->add_option("--input", c_file, "JSON input file");

  // paths
  auto* paths_cmd = app.add_subcommand("paths", "disjoint A-B path count with witnesses");
  std::string p_json, p_file;
  paths_cmd->add_option("--json", p_json, "inline JSON {n, A, B, mode, directed}");
  paths_cmd->add_option("--input", p_file, "JSON input file");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a bound function");
  std::string bd_kind;
  int bd_n = 0;
  std::uint64_t bd_x = 0;
  bounds_cmd->add_option("kind", bd_kind, "e | b | s")->required();
  bounds_cmd->add_option("--n", bd_n, "dimension")->required();
  bounds_cmd->add_option("--x", bd_x, "argument")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
  std::string v_theorem = "all", v_out;
  int v_n = 3;
  bool v_exhaustive = false, v_fail_fast = false;
  std::uint64_t v_count = 100, v_seed = 42;
  verify_cmd->add_option("--theorem", v_theorem, "theorem id or 'all'");
  verify_cmd->add_option("--n", v_n, "dimension");
  verify_cmd->add_flag("--exhaustive", v_exhaustive, "exhaustive sweep");
  verify_cmd->add_option("--random", v_count, "random instance count");
  verify_cmd->add_option("--seed", v_seed, "random seed");
  verify_cmd->add_flag("--fail-fast", v_fail_fast, "stop after first failure");
  verify_cmd->add_option("--out", v_out, "certificate JSONL output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (boundary_cmd->parsed()) return cmd_boundary(b_n, b_set, b_kind, b_directed, b_list, out);
    if (compress_cmd->parsed()) return cmd_compress(load_json_input(c_json, c_file), out);
    if (paths_cmd->parsed()) return cmd_paths(load_json_input(p_json, p_file), out);
    if (bounds_cmd->parsed()) return cmd_bounds(bd_kind, bd_n, bd_x, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(v_theorem, v_n, v_exhaustive, v_count, v_seed, v_fail_fast, v_out, out);
    }
  } catch (const Json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cubepaths
