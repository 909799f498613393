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

#include "zdg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "zdg/number_theory.hpp"

namespace zdg {

using nlohmann::json;

bool predict_complete(const RingProfile& profile) {
  const bool two_fields = profile.local_factor_count == 2 && profile.field_factor_count == 2;
  return profile.is_local || two_fields || profile.is_boolean;
}

namespace {

TheoremVerdict verdict(std::string id, bool applicable, bool holds, json detail = json::object()) {
  return {std::move(id), applicable, applicable && holds, std::move(detail)};
}

std::optional<std::uint64_t> zn_modulus(const RingSpec& spec) {
  if (spec.is_product()) return std::nullopt;
  if (const auto* z = std::get_if<Zn>(&spec.factors().front())) return z->modulus;
  return std::nullopt;
}

// For a finite local ring the maximal ideal is Z(R).
bool zero_divisor_products_vanish(const Ring& ring) {
  const auto star = ring.zero_divisors_star();
  for (ElementIndex a : star) {
    for (ElementIndex b : star) {
      if (ring.mul(a, b) != ring.zero()) return false;
    }
  }
  return true;
}

json label_list(const ZeroDivisorGraph& g, std::initializer_list<std::size_t> vs) {
  json out = json::array();
  for (std::size_t v : vs) out.push_back(g.labels[v]);
  return out;
}

}  // namespace

RingVerification verify_ring_detailed(const Ring& ring) {
  RingVerification out;
  out.profile = ring_profile(ring);
  const RingProfile& prof = out.profile;

  const ZeroDivisorGraph gamma = build_graph(ring, GraphKind::Gamma);
  const ZeroDivisorGraph zstar = build_graph(ring, GraphKind::ZStar);
  const ZeroDivisorGraph tilde = build_graph(ring, GraphKind::Tilde);
  out.gamma = analyze(gamma);
  out.zstar = analyze(zstar);
  out.tilde = analyze(tilde);

  const std::size_t vertices = prof.num_zero_divisors_star;
  const bool non_field = vertices >= 1;
  const bool three_plus = vertices >= 3;
  const auto n = zn_modulus(ring.spec());
  const bool zn_composite = n && is_composite(*n);
  auto& v = out.verdicts;

  v.push_back(verdict("thm-diameter", non_field,
                      out.tilde.is_connected && out.tilde.diameter <= Length(2),
                      {{"connected", out.tilde.is_connected}, {"diameter", to_string(out.tilde.diameter)}}));

  v.push_back(verdict("thm-girth", three_plus, out.tilde.girth == Length(3),
                      {{"girth", to_string(out.tilde.girth)}, {"vertices", vertices}}));

  const bool predicted = predict_complete(prof);
  v.push_back(verdict("thm-complete-char", non_field, out.tilde.is_complete == predicted,
                      {{"observed_complete", out.tilde.is_complete},
                       {"predicted_complete", predicted},
                       {"is_local", prof.is_local},
                       {"two_fields", prof.local_factor_count == 2 && prof.field_factor_count == 2},
                       {"is_boolean", prof.is_boolean}}));

  v.push_back(verdict("cor-reduced-two-maximal", prof.is_reduced && non_field && !prof.is_boolean,
                      out.tilde.is_complete == (prof.maximal_ideal_count == 2),
                      {{"observed_complete", out.tilde.is_complete},
                       {"maximal_ideal_count", prof.maximal_ideal_count}}));

  if (zn_composite) {
    const auto f = factorize(*n);
    const bool expected = f.size() == 1 || (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1);
    v.push_back(verdict("cor-zn-complete", true, out.tilde.is_complete == expected,
                        {{"n", *n}, {"observed_complete", out.tilde.is_complete}, {"expected_complete", expected}}));
  } else {
    v.push_back(verdict("cor-zn-complete", false, false));
  }

  // Gamma against Tilde.
  const bool gamma_eq = gamma.adjacency == tilde.adjacency;
  {
    json d{{"gamma_equals_tilde", gamma_eq}, {"gamma_complete", out.gamma.is_complete}};
    if (gamma_eq != out.gamma.is_complete) {
      for (const auto& [i, j] : tilde.adjacency.edges()) {
        if (!gamma.adjacency(i, j)) {
          d["tilde_only_edge"] = label_list(tilde, {i, j});
          break;
        }
      }
    }
    v.push_back(verdict("thm-gamma-eq-tilde", non_field, gamma_eq == out.gamma.is_complete, std::move(d)));
  }

  {
    const RingSpec local = normalized_spec(ring.spec());
    const bool is_z2xz2 = local == RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)});
    bool local_case = false;
    json d{{"is_z2xz2", is_z2xz2}, {"is_local", prof.is_local}};
    if (prof.is_local) {
      const auto char_pp = as_prime_power(prof.characteristic);
      const bool m2_zero = zero_divisor_products_vanish(ring);
      const bool char_ok = char_pp && char_pp->exponent <= 2;
      const auto count_pp = as_prime_power(vertices + 1);
      const bool count_ok = char_pp && count_pp && count_pp->prime == char_pp->prime;
      local_case = m2_zero && char_ok && count_ok;
      d["maximal_ideal_square_zero"] = m2_zero;
      d["characteristic"] = prof.characteristic;
      d["vertices"] = vertices;
    }
    v.push_back(verdict("cor-gamma-eq-tilde-local", non_field && gamma_eq, is_z2xz2 || local_case, std::move(d)));
  }

  if (zn_composite) {
    const auto pp = as_prime_power(*n);
    const bool expected = pp && pp->exponent == 2;
    v.push_back(verdict("cor-zn-gamma-eq-tilde", true, gamma_eq == expected,
                        {{"n", *n}, {"gamma_equals_tilde", gamma_eq}, {"n_is_prime_square", expected}}));
  } else {
    v.push_back(verdict("cor-zn-gamma-eq-tilde", false, false));
  }

  // ZStar against Tilde.
  const bool zstar_eq = zstar.adjacency == tilde.adjacency;
  const bool ideal = zero_divisors_form_ideal(ring);
  v.push_back(verdict("thm-zstar-eq-tilde", non_field,
                      zstar_eq == prof.is_local && prof.is_local == ideal && zstar_eq == out.zstar.is_complete,
                      {{"zstar_equals_tilde", zstar_eq},
                       {"is_local", prof.is_local},
                       {"zero_divisors_ideal", ideal},
                       {"zstar_complete", out.zstar.is_complete}}));

  if (zn_composite) {
    const bool expected = as_prime_power(*n).has_value();
    v.push_back(verdict("cor-zn-zstar-eq-tilde", true, zstar_eq == expected,
                        {{"n", *n}, {"zstar_equals_tilde", zstar_eq}, {"n_is_prime_power", expected}}));
  } else {
    v.push_back(verdict("cor-zn-zstar-eq-tilde", false, false));
  }

  {
    json d{{"universal_count", out.tilde.universal_vertices.size()}};
    if (!out.tilde.universal_vertices.empty()) d["witness"] = out.tilde.universal_vertices.front();
    v.push_back(verdict("thm-universal-vertex", non_field, !out.tilde.universal_vertices.empty(), std::move(d)));
  }

  {
    const auto tri = every_vertex_in_triangle(tilde.adjacency);
    json d = json::object();
    for (std::size_t i = 0; i < tri.witnesses.size(); ++i) {
      if (!tri.witnesses[i]) {
        d["vertex_without_triangle"] = tilde.labels[i];
        break;
      }
    }
    v.push_back(verdict("thm-triangle", three_plus, tri.holds, std::move(d)));
  }

  {
    const auto sq = square_property(tilde.adjacency);
    json d{{"non_adjacent_pairs", sq.witnesses.size() + (sq.holds ? 0 : 1)}};
    if (sq.failure) d["pair_without_square"] = label_list(tilde, {sq.failure->first, sq.failure->second});
    if (!sq.witnesses.empty()) {
      const auto& w = sq.witnesses.front();
      d["first_square"] = label_list(tilde, {w.x, w.z, w.y, w.t});
    }
    v.push_back(verdict("thm-square", non_field, sq.holds, std::move(d)));
  }

  v.push_back(verdict("thm-hypotriangulated", non_field, out.tilde.is_hypotriangulated));

  {
    const bool sub_complete = out.gamma.is_complete || out.zstar.is_complete;
    v.push_back(verdict("rem-complete-converse", non_field, !sub_complete || out.tilde.is_complete,
                        {{"tilde_complete", out.tilde.is_complete},
                         {"gamma_complete", out.gamma.is_complete},
                         {"zstar_complete", out.zstar.is_complete},
                         {"converse_fails", out.tilde.is_complete && !sub_complete}}));
  }
  return out;
}

std::vector<TheoremVerdict> verify_ring(const RingSpec& spec, std::size_t order_cap) {
  return verify_ring_detailed(Ring(spec, order_cap)).verdicts;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_pairs(std::uint64_t m) {
  if (m % 2 != 0 || m < 6) throw std::invalid_argument("goldbach_pairs: need an even m >= 6");
  if (m > kGoldbachBound) throw CapExceeded("goldbach_pairs: m exceeds the sieve bound");
  const auto prime = prime_sieve(m);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; 2 * p < m; ++p) {
    if (prime[p] && prime[m - p]) out.emplace_back(p, m - p);
  }
  return out;
}

namespace {

bool tilde_is_kn(std::uint64_t k, std::uint64_t n, std::size_t order_cap) {
  const Ring ring(RingSpec::zn(k), order_cap);
  if (ring.zero_divisors_star().size() != n) return false;
  return is_complete(build_graph(ring, GraphKind::Tilde).adjacency);
}

}  // namespace

RealizationResult kn_realizable(std::uint64_t n, std::size_t order_cap) {
  if (n < 1) throw std::invalid_argument("kn_realizable: n must be positive");
  if (n + 2 > kGoldbachBound) throw CapExceeded("kn_realizable: n + 2 exceeds the sieve bound");
  RealizationResult r;
  r.n = n;
  const auto add = [&](std::uint64_t k, std::variant<PrimePowerReason, TwoPrimesReason> reason) {
    r.certificates.push_back({k, reason, CertificateCheck::BeyondCap});
  };
  if (n % 2 == 0) {
    if (auto pp = as_prime_power(n + 1)) add(pp->prime * (n + 1), PrimePowerReason{pp->prime, pp->exponent + 1});
    if (n + 2 >= 6) {
      for (const auto& [p, q] : goldbach_pairs(n + 2)) add(p * q, TwoPrimesReason{p, q});
    }
  } else {
    if (auto pp = as_prime_power(n + 1); pp && pp->prime == 2) add(2 * (n + 1), PrimePowerReason{2, pp->exponent + 1});
    if (is_prime(n)) add(2 * n, TwoPrimesReason{2, n});
  }
  std::sort(r.certificates.begin(), r.certificates.end(),
            [](const auto& a, const auto& b) { return a.k < b.k; });
  for (auto& c : r.certificates) {
    if (c.k <= order_cap) c.check = tilde_is_kn(c.k, n, order_cap) ? CertificateCheck::Verified : CertificateCheck::Failed;
  }
  r.realizable = !r.certificates.empty();
  return r;
}

std::map<std::uint64_t, std::vector<std::uint64_t>> kn_brute_table(std::uint64_t n_max, std::uint64_t k_max,
                                                                   std::size_t order_cap) {
  if (k_max > order_cap) throw CapExceeded("kn_brute_scan: k_max exceeds the order cap");
  std::map<std::uint64_t, std::vector<std::uint64_t>> table;
  for (std::uint64_t k = 4; k <= k_max; ++k) {
    if (!is_composite(k)) continue;
    const Ring ring(RingSpec::zn(k), order_cap);
    const std::uint64_t count = ring.zero_divisors_star().size();
    if (count > n_max) continue;
    if (is_complete(build_graph(ring, GraphKind::Tilde).adjacency)) table[count].push_back(k);
  }
  return table;
}

std::vector<std::uint64_t> kn_brute_scan(std::uint64_t n, std::uint64_t k_max, std::size_t order_cap) {
  if (k_max > order_cap) throw CapExceeded("kn_brute_scan: k_max exceeds the order cap");
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 4; k <= k_max; ++k) {
    if (is_composite(k) && tilde_is_kn(k, n, order_cap)) out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

SuiteReport run_catalog(const std::vector<CatalogEntry>& entries, const SuiteOptions& options) {
  SuiteReport report;
  report.rings.resize(entries.size());

  const auto work = [&](std::size_t i) {
    RingReport& rr = report.rings[i];
    rr.name = entries[i].name;
    rr.spec_text = to_string(entries[i].spec);
    try {
      rr.result = verify_ring_detailed(Ring(entries[i].spec, options.order_cap));
    } catch (const std::exception& e) {
      rr.error = e.what();
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, entries.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) work(i);
      });
    }
  }

  for (const auto& rr : report.rings) {
    if (!rr.result) {
      report.failures.push_back({rr.name, "error", json{{"message", rr.error}}});
      continue;
    }
    for (const auto& v : rr.result->verdicts) {
      ++report.verdict_count;
      if (v.applicable) ++report.applicable_count;
      if (v.holds) ++report.holds_count;
      if (v.failed()) report.failures.push_back({rr.name, v.theorem_id, v.detail});
    }
  }
  return report;
}

}  // namespace zdg
