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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/metrics.hpp"
#include "zdg/ring.hpp"
#include "zdg/theorems.hpp"

namespace {

using zdg::build_graph;
using zdg::GraphKind;
using zdg::parse_ring_spec;
using zdg::RingSpec;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

zdg::ZeroDivisorGraph tilde(const std::string& spec) { return build_graph(parse_ring_spec(spec), GraphKind::Tilde); }

std::vector<RingSpec> sweep_specs() {
  std::vector<RingSpec> out;
  for (const auto& e : zdg::builtin_catalog().entries) out.push_back(e.spec);
  for (const auto& e : zdg::generate_zn_range(4, 400).entries) out.push_back(e.spec);
  for (const auto& s : corpus::product_specs(512)) out.push_back(parse_ring_spec(s));
  return out;
}

std::size_t prime_factor_count(std::uint64_t n, std::vector<unsigned>& exps) {
  exps.clear();
  for (std::uint64_t p = 2; n > 1; ++p) {
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) exps.push_back(e);
  }
  return exps.size();
}

void edge_sets(Outcome& o) {
  const auto g6 = build_graph(RingSpec::zn(6), GraphKind::Gamma);
  o.require(oracle::label_edges(g6) == oracle::label_set({{"2", "3"}, {"3", "4"}}), "Gamma(Z6)");
  const auto z6 = build_graph(RingSpec::zn(6), GraphKind::ZStar);
  o.require(oracle::label_edges(z6) == oracle::label_set({{"2", "4"}}), "Z*(Z6)");
  const auto t6 = tilde("Z6");
  o.require(t6.labels == std::vector<std::string>{"2", "3", "4"} && t6.adjacency == zdg::complete_graph(3),
            "tilde(Z6) = K3");
  const auto t24 = tilde("Z2 x Z4");
  o.require(t24.vertex_count() == 5 && t24.adjacency.edge_count() == 8, "tilde(Z2xZ4) has 8 edges");
  std::set<std::pair<std::string, std::string>> non_edges;
  for (std::size_t i = 0; i < t24.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < t24.vertex_count(); ++j) {
      if (!t24.adjacency(i, j)) {
        auto a = t24.labels[i], b = t24.labels[j];
        if (b < a) std::swap(a, b);
        non_edges.emplace(a, b);
      }
    }
  }
  o.require(non_edges == oracle::label_set({{"(0,1)", "(1,2)"}, {"(0,3)", "(1,2)"}}), "tilde(Z2xZ4) non-edges");
}

void diameters(Outcome& o) {
  o.require(zdg::diameter(tilde("Z4").adjacency) == zdg::Length(0), "diam Z4");
  o.require(zdg::diameter(tilde("Z6").adjacency) == zdg::Length(1), "diam Z6");
  o.require(zdg::diameter(tilde("Z2 x Z4").adjacency) == zdg::Length(2), "diam Z2xZ4");
}

void theorem_sweep(Outcome& o) {
  std::vector<zdg::CatalogEntry> entries;
  for (const auto& s : sweep_specs()) entries.push_back({zdg::to_string(s) + "#" + std::to_string(entries.size()), s});
  zdg::SuiteOptions opts;
  opts.threads = 0;
  const auto report = zdg::run_catalog(entries, opts);
  for (const auto& f : report.failures) o.require(false, f.ring + " " + f.theorem_id + " " + f.detail.dump());
  o.note << (o.pass ? "" : "; ") << report.rings.size() << " rings, " << report.applicable_count
         << " applicable verdicts, " << report.failures.size() << " failures";
}

void realizability(Outcome& o) {
  const auto ks = [](std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& c : zdg::kn_realizable(n).certificates) out.push_back(c.k);
    return out;
  };
  const auto has = [&](std::uint64_t n, std::uint64_t k) { return std::ranges::count(ks(n), k) == 1; };
  o.require(has(7, 16), "n=7 -> 16");
  o.require(has(11, 22), "n=11 -> 22");
  o.require(has(12, 169), "n=12 -> 169");
  o.require(ks(48) == std::vector<std::uint64_t>{141, 301, 343, 481, 589}, "n=48 certificates");
  o.require(!zdg::kn_realizable(9).realizable, "n=9 not realizable");
  for (const auto& c : zdg::kn_realizable(48).certificates) {
    o.require(c.check == zdg::CertificateCheck::Verified, "n=48 certificate verified");
  }
  auto table = zdg::kn_brute_table(60, 600);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    std::vector<std::uint64_t> predicted;
    for (auto k : ks(n)) {
      if (k <= 600) predicted.push_back(k);
    }
    const auto it = table.find(n);
    const auto scanned = it == table.end() ? std::vector<std::uint64_t>{} : it->second;
    o.require(predicted == scanned, "brute scan disagrees at n=" + std::to_string(n));
  }
  for (std::uint64_t n : {5, 7, 9, 11, 12, 48}) {
    o.require(table[n] == zdg::kn_brute_scan(n, 600), "table vs single scan at n=" + std::to_string(n));
  }
}

void z390(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = tilde("Z390");
  const bool chordal = zdg::is_chordal(g.adjacency);
  const bool cycle = zdg::verify_cycle_chordless(g, std::vector<std::string>{"2", "3", "5", "8"});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(g.vertex_count() == 293, "293 vertices");
  o.require(!chordal, "not chordal");
  o.require(cycle, "[2,3,5,8] chordless");
  o.require(secs < 5.0, "time budget");
  o.note << (o.pass ? "" : "; ") << "293 vertices, " << secs << " s";
}

void isomorphisms(Outcome& o) {
  const auto check = [&](const char* a, const char* b, bool expect) {
    const auto g = tilde(a), h = tilde(b);
    const auto m = zdg::graphs_isomorphic(g, h);
    o.require(m.has_value() == expect, std::string(a) + " vs " + b);
    if (m) o.require(zdg::is_isomorphism(g.adjacency, h.adjacency, *m), std::string(a) + " witness");
  };
  check("Z2 x Z4", "Z2 x Z2[x]/(x^2)", true);
  check("Z12", "Z3 x Z2[x]/(x^2)", true);
  check("Z4 x GF(4)", "Z2[x]/(x^2) x GF(4)", true);
  check("Z4 x GF(4)", "Z2 x Z2 x Z3", false);
}

void oracle_equivalences(Outcome& o) {
  std::size_t crt = 0, graphs = 0;
  for (const auto& spec : sweep_specs()) {
    if (spec.order() > 256) continue;
    const auto norm = zdg::normalize(spec);
    const zdg::Ring src(spec), dst(norm.normalized);
    const auto& phi = norm.forward;
    bool ok = src.order() == dst.order() && phi[src.one()] == dst.one();
    std::vector<bool> hit(dst.order(), false);
    for (zdg::ElementIndex a = 0; a < src.order() && ok; ++a) {
      ok = !hit[phi[a]];
      hit[phi[a]] = true;
      for (zdg::ElementIndex b = 0; b < src.order() && ok; ++b) {
        ok = phi[src.add(a, b)] == dst.add(phi[a], phi[b]) && phi[src.mul(a, b)] == dst.mul(phi[a], phi[b]);
      }
    }
    o.require(ok, "CRT map for " + zdg::to_string(spec));
    ++crt;

    for (auto kind : {GraphKind::Gamma, GraphKind::ZStar, GraphKind::Tilde}) {
      const auto g = build_graph(src, kind);
      if (g.vertex_count() > 12) continue;
      const auto gi = oracle::girth_by_enumeration(g.adjacency);
      o.require(zdg::girth(g.adjacency) == (gi == 0 ? zdg::Length::infinity() : zdg::Length(gi)),
                "girth of " + zdg::to_string(spec));
      if (g.vertex_count() <= 10) {
        o.require(zdg::is_chordal(g.adjacency) == oracle::chordal_by_enumeration(g.adjacency),
                  "chordality of " + zdg::to_string(spec));
      }
      ++graphs;
    }
  }
  std::mt19937 rng(390);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.8)(rng));
    const auto gi = oracle::girth_by_enumeration(g);
    o.require(zdg::girth(g) == (gi == 0 ? zdg::Length::infinity() : zdg::Length(gi)),
              "girth random #" + std::to_string(trial));
    if (n <= 10) {
      o.require(zdg::is_chordal(g) == oracle::chordal_by_enumeration(g), "chordal random #" + std::to_string(trial));
    }
  }
  o.note << (o.pass ? "" : "; ") << crt << " CRT maps, " << graphs << " ring graphs, 200 random graphs";
}

void zn_corollaries(Outcome& o) {
  std::size_t count = 0;
  std::vector<unsigned> exps;
  for (std::uint64_t n = 4; n <= 400; ++n) {
    if (oracle::trial_prime(n)) continue;
    ++count;
    prime_factor_count(n, exps);
    const bool prime_power = exps.size() == 1;
    const bool pq = exps.size() == 2 && exps[0] == 1 && exps[1] == 1;
    const zdg::Ring r(RingSpec::zn(n));
    const auto g = build_graph(r, GraphKind::Gamma), z = build_graph(r, GraphKind::ZStar),
               t = build_graph(r, GraphKind::Tilde);
    const auto tag = "n=" + std::to_string(n);
    o.require(zdg::is_complete(t.adjacency) == (prime_power || pq), "completeness " + tag);
    o.require(oracle::zn_tilde_complete(n) == (prime_power || pq), "gcd oracle completeness " + tag);
    o.require((g.adjacency == t.adjacency) == (prime_power && exps[0] == 2), "Gamma = tilde " + tag);
    o.require((z.adjacency == t.adjacency) == prime_power, "Z* = tilde " + tag);
  }
  o.note << (o.pass ? "" : "; ") << count << " composite moduli";
}

void remark_instance(Outcome& o) {
  const zdg::Ring r(RingSpec::zn(6));
  o.require(zdg::is_complete(build_graph(r, GraphKind::Tilde).adjacency), "tilde(Z6) complete");
  o.require(!zdg::is_complete(build_graph(r, GraphKind::Gamma).adjacency), "Gamma(Z6) not complete");
  o.require(!zdg::is_complete(build_graph(r, GraphKind::ZStar).adjacency), "Z*(Z6) not complete");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"edge-set reproduction", edge_sets},
      {"diameter trichotomy", diameters},
      {"theorem sweep", theorem_sweep},
      {"K_n realizability table", realizability},
      {"Z_390 non-chordality", z390},
      {"isomorphism claims", isomorphisms},
      {"oracle equivalences", oracle_equivalences},
      {"Z_n corollary sweeps", zn_corollaries},
      {"complete tilde with incomplete parts (Z_6)", remark_instance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto note = o.note.str();
    std::printf("%s  [%zu] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                note.empty() ? "" : ": ", note.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
