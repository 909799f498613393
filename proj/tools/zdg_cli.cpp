// Copyright 2026 The zdgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// zdg: command-line front end for the zero-divisor graph library.
//
//   zdg ring <spec>
//   zdg graph <spec> --kind tilde --format dot
//   zdg analyze <spec>
//   zdg verify --builtin | --catalog FILE | --zn-range LO HI
//   zdg realize-kn <n> [--k-max K]
//   zdg iso <spec1> <spec2> [--kind tilde]
//
// Exit status: 0 success, 1 a failing applicable verdict, 2 usage or input
// errors. ZDG_ORDER_CAP overrides the default ring-order cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/metrics.hpp"
#include "zdg/report.hpp"
#include "zdg/ring.hpp"
#include "zdg/theorems.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t order_cap_from_env() {
  const char* raw = std::getenv("ZDG_ORDER_CAP");
  if (raw == nullptr || *raw == '\0') return zdg::kDefaultOrderCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v < 2) throw UsageError(std::string("invalid ZDG_ORDER_CAP '") + raw + "'");
  return static_cast<std::size_t>(v);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string graph_text(const zdg::ZeroDivisorGraph& g) {
  std::ostringstream out;
  out << to_string(g.kind) << " graph of " << g.ring_spec_text << ": " << g.vertex_count() << " vertices, "
      << g.adjacency.edge_count() << " edges\n";
  out << "vertices:";
  for (const auto& l : g.labels) out << " " << l;
  out << "\nedges:\n";
  for (const auto& [i, j] : g.adjacency.edges()) out << "  " << g.labels[i] << " -- " << g.labels[j] << "\n";
  return out.str();
}

json graph_json(const zdg::ZeroDivisorGraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.adjacency.edges()) edges.push_back({g.labels[i], g.labels[j]});
  return {{"kind", to_string(g.kind)}, {"ring", g.ring_spec_text}, {"labels", g.labels}, {"edges", edges}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of finite commutative rings"};
  app.require_subcommand(1, 1);

  std::string output, format = "text";
  app.add_option("-o,--output", output, "Write output to this file instead of stdout");

  std::vector<std::string> formats{"text", "json"};
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  std::string spec_text, spec_text2, kind_text = "tilde";

  auto* ring_cmd = app.add_subcommand("ring", "Print the structural profile of a ring");
  ring_cmd->add_option("spec", spec_text, "Ring spec, e.g. \"Z2 x Z4\"")->required();
  add_format(ring_cmd, formats);

  auto* graph_cmd = app.add_subcommand("graph", "Build one of the three graphs");
  graph_cmd->add_option("spec", spec_text, "Ring spec")->required();
  graph_cmd->add_option("--kind", kind_text, "gamma | zstar | tilde")
      ->required()
      ->check(CLI::IsMember({"gamma", "zstar", "tilde"}));
  add_format(graph_cmd, {"text", "json", "dot"});

  auto* analyze_cmd = app.add_subcommand("analyze", "Graph invariants for all three graphs");
  analyze_cmd->add_option("spec", spec_text, "Ring spec")->required();
  add_format(analyze_cmd, formats);

  bool builtin = false;
  std::string catalog_path;
  std::vector<std::uint64_t> zn_range;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem suite over a catalog");
  auto* opt_builtin = verify_cmd->add_flag("--builtin", builtin, "Built-in catalog of named rings");
  auto* opt_catalog = verify_cmd->add_option("--catalog", catalog_path, "Catalog file");
  auto* opt_range = verify_cmd->add_option("--zn-range", zn_range, "Composite Z_n for LO <= n <= HI")->expected(2);
  opt_builtin->excludes(opt_catalog, opt_range);
  opt_catalog->excludes(opt_range);
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  add_format(verify_cmd, formats);

  std::uint64_t kn = 0, k_max = 600;
  auto* realize_cmd = app.add_subcommand("realize-kn", "Find k with the extended graph of Z_k equal to K_n");
  realize_cmd->add_option("n", kn, "Clique size")->required()->check(CLI::PositiveNumber);
  realize_cmd->add_option("--k-max", k_max, "Bound for the brute-force cross-check");
  add_format(realize_cmd, formats);

  auto* iso_cmd = app.add_subcommand("iso", "Test two rings' graphs for isomorphism");
  iso_cmd->add_option("spec1", spec_text, "First ring spec")->required();
  iso_cmd->add_option("spec2", spec_text2, "Second ring spec")->required();
  iso_cmd->add_option("--kind", kind_text, "gamma | zstar | tilde")->check(CLI::IsMember({"gamma", "zstar", "tilde"}));
  add_format(iso_cmd, formats);

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
    const std::size_t cap = order_cap_from_env();
    const bool as_json = format == "json";

    if (ring_cmd->parsed()) {
      const zdg::Ring ring(zdg::parse_ring_spec(spec_text, cap), cap);
      const auto profile = zdg::ring_profile(ring);
      if (as_json) {
        emit(dump({{"ring", to_string(ring.spec())}, {"profile", zdg::to_json(profile)}}), output);
      } else {
        emit("ring                   " + to_string(ring.spec()) + "\n" + zdg::to_text(profile), output);
      }
      return kExitOk;
    }

    if (graph_cmd->parsed()) {
      const auto g = zdg::build_graph(zdg::parse_ring_spec(spec_text, cap), zdg::parse_graph_kind(kind_text), cap);
      if (format == "dot") {
        emit(zdg::export_dot(g), output);
      } else if (as_json) {
        emit(dump(graph_json(g)), output);
      } else {
        emit(graph_text(g), output);
      }
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      const zdg::Ring ring(zdg::parse_ring_spec(spec_text, cap), cap);
      json j{{"ring", to_string(ring.spec())}};
      std::string text = "ring " + to_string(ring.spec()) + "\n";
      for (auto kind : {zdg::GraphKind::Gamma, zdg::GraphKind::ZStar, zdg::GraphKind::Tilde}) {
        const auto report = zdg::analyze(zdg::build_graph(ring, kind));
        j[std::string(to_string(kind))] = zdg::to_json(report);
        text += "\n[" + std::string(to_string(kind)) + "]\n" + zdg::to_text(report);
      }
      emit(as_json ? dump(j) : text, output);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      zdg::Catalog catalog;
      if (builtin) {
        catalog = zdg::builtin_catalog();
      } else if (!catalog_path.empty()) {
        catalog = zdg::load_catalog(catalog_path, cap);
      } else if (zn_range.size() == 2) {
        catalog = zdg::generate_zn_range(zn_range[0], zn_range[1], cap);
      } else {
        throw UsageError("verify needs one of --builtin, --catalog FILE, --zn-range LO HI");
      }
      for (const auto& notice : catalog.notices) std::cerr << "note: " << notice << "\n";
      const auto report = zdg::run_catalog(catalog.entries, {cap, threads});
      emit(as_json ? dump(zdg::to_json(report)) : zdg::to_text(report), output);
      return report.success() ? kExitOk : kExitVerdictFailed;
    }

    if (realize_cmd->parsed()) {
      const auto result = zdg::kn_realizable(kn, cap);
      const std::uint64_t bound = std::min<std::uint64_t>(k_max, cap);
      const auto scan = zdg::kn_brute_scan(kn, bound, cap);
      std::vector<std::uint64_t> predicted;
      for (const auto& c : result.certificates) {
        if (c.k <= bound) predicted.push_back(c.k);
      }
      const bool agrees = predicted == scan;
      if (as_json) {
        json j = zdg::to_json(result);
        j["brute_scan"] = {{"k_max", bound}, {"k", scan}, {"agrees", agrees}};
        emit(dump(j), output);
      } else {
        std::ostringstream out;
        out << zdg::to_text(result) << "brute scan (k <= " << bound << "):";
        for (auto k : scan) out << " " << k;
        out << "\ncross-check " << (agrees ? "agrees" : "DISAGREES") << "\n";
        emit(out.str(), output);
      }
      return kExitOk;
    }

    if (iso_cmd->parsed()) {
      const auto kind = zdg::parse_graph_kind(kind_text);
      const auto g = zdg::build_graph(zdg::parse_ring_spec(spec_text, cap), kind, cap);
      const auto h = zdg::build_graph(zdg::parse_ring_spec(spec_text2, cap), kind, cap);
      const auto map = zdg::graphs_isomorphic(g, h);
      if (as_json) {
        json j{{"kind", to_string(kind)}, {"first", g.ring_spec_text}, {"second", h.ring_spec_text},
               {"isomorphic", map.has_value()}};
        if (map) {
          json pairs = json::array();
          for (std::size_t v = 0; v < map->size(); ++v) pairs.push_back({g.labels[v], h.labels[(*map)[v]]});
          j["bijection"] = pairs;
        }
        emit(dump(j), output);
      } else if (!map) {
        emit("not isomorphic\n", output);
      } else {
        std::ostringstream out;
        out << "isomorphic\n";
        for (std::size_t v = 0; v < map->size(); ++v) out << "  " << g.labels[v] << " -> " << h.labels[(*map)[v]] << "\n";
        emit(out.str(), output);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
