// nutkit - exact toolkit for nut graphs: classification, expansion,
// enumeration, censuses and existence certificates.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nutkit/canonical.hpp"
#include "nutkit/catalog.hpp"
#include "nutkit/exact_kernel.hpp"
#include "nutkit/generate.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/nut.hpp"
#include "nutkit/symmetry.hpp"

using namespace nutkit;

namespace {

int default_workers() {
  const char* w = std::getenv("NUTKIT_WORKERS");
  if (!w) return 1;
  const int v = std::atoi(w);
  return v >= 1 ? v : 1;
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Input may be "-" (stdin), an inline adjacency list, a file path, or an
// inline graph6 string; the format is detected from the leading character
// unless forced.
Graph read_graph(const std::string& input, const std::string& format) {
  std::string text;
  if (input == "-") {
    text = slurp(std::cin);
  } else if (!input.empty() && input[0] == '{') {
    text = input;
  } else {
    std::ifstream file(input);
    if (file.good())
      text = slurp(file);
    else
      text = input;
  }
  text = trim(text);
  if (format == "adjlist") return parse_adjacency_list(text);
  if (format == "graph6") return parse_graph6(text);
  if (!text.empty() && text[0] == '{') return parse_adjacency_list(text);
  return parse_graph6(text);
}

const char* class_name(NutClass c) {
  switch (c) {
    case NutClass::NonSingular: return "NonSingular";
    case NutClass::SingularNonCore: return "SingularNonCore";
    case NutClass::CoreNonNut: return "CoreNonNut";
    case NutClass::Nut: return "Nut";
  }
  return "?";
}

std::string witness_string(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::optional<std::chrono::steady_clock::time_point> deadline_from(double budget) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(budget));
}

int cmd_check(const std::string& input, const std::string& format, bool witness, bool json) {
  Graph g = read_graph(input, format);
  auto report = classify(g);
  if (json) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["nullity"] = report.nullity;
    j["classification"] = class_name(report.classification);
    if (witness && report.kernel_witness) {
      std::vector<std::string> entries;
      for (const auto& x : *report.kernel_witness) entries.push_back(x.get_str());
      j["kernel"] = entries;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << class_name(report.classification) << ", nullity " << report.nullity << "\n";
    if (witness && report.kernel_witness)
      std::cout << "kernel: " << witness_string(*report.kernel_witness) << "\n";
  }
  return 0;
}

int cmd_extend(const std::string& input, const std::string& format, int vertex,
               const std::string& out_format) {
  Graph g = read_graph(input, format);
  auto ext = fowler_extend(g, vertex);
  if (out_format == "adjlist")
    std::cout << to_adjacency_list(ext.result) << "\n";
  else
    std::cout << to_graph6(ext.result) << "\n";
  return 0;
}

int cmd_detect(const std::string& input, const std::string& format) {
  Graph g = read_graph(input, format);
  auto witness = fowler_detect(g);
  if (!witness) {
    std::cout << "seed\n";
  } else {
    std::cout << "c-graph base=" << to_graph6(witness->base) << " pivot=" << witness->pivot
              << "\n";
  }
  return 0;
}

int cmd_generate(int n, int d, int girth, bool nut_only, bool count_only, bool connected,
                 int workers, double budget) {
  GenSpec spec;
  spec.n = n;
  spec.d = d;
  spec.min_girth = girth;
  spec.connected_only = connected;
  EnumOptions opts;
  opts.workers = workers;
  opts.deadline = deadline_from(budget);
  std::uint64_t shown = 0;
  enumerate(
      spec,
      [&](const Graph& g) {
        if (nut_only && !is_nut_graph(g)) return;
        ++shown;
        if (!count_only) std::cout << to_graph6(g) << "\n";
      },
      opts);
  if (count_only) std::cout << shown << "\n";
  return 0;
}

int cmd_census(int d, const std::string& orders, int workers, double budget, bool json) {
  int lo = 0, hi = 0;
  const auto dots = orders.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::atoi(orders.c_str());
  } else {
    lo = std::atoi(orders.substr(0, dots).c_str());
    hi = std::atoi(orders.substr(dots + 2).c_str());
  }
  if (lo < 1 || hi < lo) {
    std::cerr << "bad --orders range\n";
    return 2;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = lo; n <= hi; ++n) {
    if (!admissible_pair(n, d)) continue;
    CensusOptions opts;
    opts.workers = workers;
    opts.budget_seconds = budget;
    const std::uint64_t count = census(d, n, opts);
    if (json) {
      nlohmann::ordered_json row;
      row["order"] = n;
      row["count"] = count;
      rows.push_back(row);
    } else {
      std::cout << n << " " << count << "\n";
    }
  }
  if (json) std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_certify(int d, bool trusting, const std::string& out, int workers, double budget) {
  CertifyOptions opts;
  opts.mode = trusting ? ExclusionMode::Trusting : ExclusionMode::Strict;
  opts.workers = workers;
  opts.budget_seconds = budget;
  auto cert = certify_N(d, opts);
  const std::string json = certificate_to_json(cert);
  if (out.empty()) {
    std::cout << json;
  } else {
    std::ofstream file(out, std::ios::binary);
    file << json;
    if (!file) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_seeds(bool validate, int d) {
  const auto& catalog = load_seed_catalog();
  int shown = 0;
  for (const auto& entry : catalog) {
    if (d > 0 && entry.degree != d) continue;
    ++shown;
    if (!validate)
      std::cout << "d=" << entry.degree << " order=" << entry.order << " "
                << to_graph6(entry.graph) << "\n";
  }
  if (validate) std::cout << shown << " seeds ok\n";
  return 0;
}

int cmd_vt(const std::string& input, const std::string& format) {
  Graph g = read_graph(input, format);
  std::cout << (is_vertex_transitive(g) ? "vertex-transitive" : "not vertex-transitive")
            << "\n";
  return 0;
}

int cmd_vt_pair(int n, int d) {
  const auto c = check_vt_conditions(n, d);
  switch (c.verdict) {
    case VTVerdict::PassMod0: std::cout << "pass: d = 0 mod 4, n even, n >= d+4\n"; break;
    case VTVerdict::PassMod2: std::cout << "pass: d = 2 mod 4, n = 0 mod 4, n >= d+6\n"; break;
    case VTVerdict::FailOddDegree: std::cout << "fail: odd degree\n"; break;
    case VTVerdict::FailParity:
      std::cout << (d % 4 == 0 ? "fail: n != 0 mod 2\n" : "fail: n != 0 mod 4\n");
      break;
    case VTVerdict::FailOrderBound:
      std::cout << (d % 4 == 0 ? "fail: n < d+4\n" : "fail: n < d+6\n");
      break;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"nutkit - exact nut-graph toolkit"};
  app.require_subcommand(1);
  const int workers_default = default_workers();

  std::string input, format = "auto", out_format = "graph6", out_file, orders;
  bool witness = false, json = false, nut_only = false, count_only = false;
  bool connected = false, validate = false, trusting = false, strict = false;
  int vertex = 0, n = 0, d = 0, girth = 0, workers = workers_default;
  double budget = 60.0;

  auto* check = app.add_subcommand("check", "classify a graph");
  check->add_option("graph", input, "graph (path, '-', graph6 or {adjlist})")->required();
  check->add_option("--format", format, "auto|graph6|adjlist");
  check->add_flag("--witness", witness, "print the kernel vector");
  check->add_flag("--json", json, "JSON output");

  auto* extend = app.add_subcommand("extend", "expand a nut graph at a vertex");
  extend->add_option("graph", input)->required();
  extend->add_option("--vertex", vertex, "pivot vertex")->required();
  extend->add_option("--format", format, "auto|graph6|adjlist");
  extend->add_option("--out-format", out_format, "graph6|adjlist");

  auto* detect = app.add_subcommand("detect", "decompose a graph as an expansion");
  detect->add_option("graph", input)->required();
  detect->add_option("--format", format, "auto|graph6|adjlist");

  auto* generate = app.add_subcommand("generate", "enumerate d-regular graphs");
  generate->add_option("-n", n, "order")->required();
  generate->add_option("-d", d, "degree")->required();
  generate->add_option("--girth", girth, "minimum girth");
  generate->add_flag("--nut-only", nut_only, "emit only nut graphs");
  generate->add_flag("--count-only", count_only, "print the count instead of graphs");
  generate->add_flag("--connected", connected, "restrict to connected graphs");
  generate->add_option("--workers", workers, "worker threads");
  generate->add_option("--budget", budget, "time budget in seconds (default 60)");

  auto* census_cmd = app.add_subcommand("census", "count nut graphs per order");
  census_cmd->add_option("-d", d, "degree")->required();
  census_cmd->add_option("--orders", orders, "range A..B")->required();
  census_cmd->add_option("--workers", workers, "worker threads");
  census_cmd->add_option("--budget", budget, "time budget in seconds per order");
  census_cmd->add_flag("--json", json, "JSON output");

  auto* certify = app.add_subcommand("certify", "emit an existence certificate");
  certify->add_option("-d", d, "degree")->required();
  certify->add_flag("--strict", strict, "recompute every exclusion census (default)");
  certify->add_flag("--trusting", trusting, "cite exclusion counts without recomputing");
  certify->add_option("--out", out_file, "write the JSON here instead of stdout");
  certify->add_option("--workers", workers, "worker threads");
  certify->add_option("--budget", budget, "time budget in seconds per exclusion");

  auto* seeds = app.add_subcommand("seeds", "list or validate the seed catalog");
  seeds->add_flag("--validate", validate, "validate all entries");
  seeds->add_option("-d", d, "restrict to one degree");

  auto* vt = app.add_subcommand("vt", "vertex-transitivity test");
  vt->add_option("graph", input)->required();
  vt->add_option("--format", format, "auto|graph6|adjlist");

  auto* vt_pair = app.add_subcommand("vt-pair", "necessary conditions for (n, d)");
  vt_pair->add_option("-n", n, "order")->required();
  vt_pair->add_option("-d", d, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(input, format, witness, json);
    if (app.got_subcommand(extend)) return cmd_extend(input, format, vertex, out_format);
    if (app.got_subcommand(detect)) return cmd_detect(input, format);
    if (app.got_subcommand(generate))
      return cmd_generate(n, d, girth, nut_only, count_only, connected, workers, budget);
    if (app.got_subcommand(census_cmd)) return cmd_census(d, orders, workers, budget, json);
    if (app.got_subcommand(certify))
      return cmd_certify(d, trusting && !strict, out_file, workers, budget);
    if (app.got_subcommand(seeds)) return cmd_seeds(validate, d);
    if (app.got_subcommand(vt)) return cmd_vt(input, format);
    if (app.got_subcommand(vt_pair)) return cmd_vt_pair(n, d);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::budget_exceeded ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
