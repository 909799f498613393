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

#ifndef ZDG_THEOREMS_HPP
#define ZDG_THEOREMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/metrics.hpp"
#include "zdg/ring.hpp"

namespace zdg {

struct TheoremVerdict {
  std::string theorem_id;
  bool applicable = false;
  bool holds = false;
  nlohmann::json detail = nlohmann::json::object();

  bool failed() const { return applicable && !holds; }
};

/// Completeness predicate for the extended graph: R local, a product of two
/// fields, or boolean.
bool predict_complete(const RingProfile& profile);

/// Everything computed while verifying one ring.
struct RingVerification {
  RingProfile profile;
  AnalysisReport gamma;
  AnalysisReport zstar;
  AnalysisReport tilde;
  std::vector<TheoremVerdict> verdicts;
};

RingVerification verify_ring_detailed(const Ring& ring);
std::vector<TheoremVerdict> verify_ring(const RingSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// Pairs of distinct primes p < q with p + q = m, ascending in p. Requires
/// m even and 6 <= m <= kGoldbachBound.
inline constexpr std::uint64_t kGoldbachBound = 10'000'000;
std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_pairs(std::uint64_t m);

struct PrimePowerReason {
  std::uint64_t prime;
  unsigned exponent;  // k = prime^exponent
};
struct TwoPrimesReason {
  std::uint64_t p, q;  // k = p * q, p < q
};

enum class CertificateCheck { Verified, Failed, BeyondCap };

struct RealizationCertificate {
  std::uint64_t k;
  std::variant<PrimePowerReason, TwoPrimesReason> reason;
  CertificateCheck check;
};

struct RealizationResult {
  std::uint64_t n = 0;
  bool realizable = false;
  /// Sorted by k.
  std::vector<RealizationCertificate> certificates;
  std::uint64_t search_bound_used = kGoldbachBound;
};

/// Values k with the extended graph of Z_k equal to K_n, from the parity-split
/// prime-power / Goldbach characterization. Certificates with k <= order_cap
/// are checked by construction. Throws CapExceeded when n + 2 exceeds the
/// sieve bound.
RealizationResult kn_realizable(std::uint64_t n, std::size_t order_cap = kDefaultOrderCap);

/// Composite k <= k_max with |Z(Z_k)*| = n and a complete extended graph, by
/// direct construction.
std::vector<std::uint64_t> kn_brute_scan(std::uint64_t n, std::uint64_t k_max,
                                         std::size_t order_cap = kDefaultOrderCap);

/// kn_brute_scan for every n <= n_max at once: n -> ascending list of k.
std::map<std::uint64_t, std::vector<std::uint64_t>> kn_brute_table(std::uint64_t n_max, std::uint64_t k_max,
                                                                   std::size_t order_cap = kDefaultOrderCap);

struct SuiteOptions {
  std::size_t order_cap = kDefaultOrderCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct RingReport {
  std::string name;
  std::string spec_text;
  std::optional<RingVerification> result;
  /// Set when the ring could not be verified (cap exceeded, ...).
  std::string error;
};

struct SuiteFailure {
  std::string ring;
  std::string theorem_id;
  nlohmann::json detail;
};

struct SuiteReport {
  std::vector<RingReport> rings;
  std::size_t verdict_count = 0;
  std::size_t applicable_count = 0;
  std::size_t holds_count = 0;
  std::vector<SuiteFailure> failures;

  bool success() const { return failures.empty(); }
};

SuiteReport run_catalog(const std::vector<CatalogEntry>& entries, const SuiteOptions& options = {});

}  // namespace zdg

#endif  // ZDG_THEOREMS_HPP
