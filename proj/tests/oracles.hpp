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

// Brute-force reference implementations used only by the tests. None of
// these go through the library's algorithms.

#ifndef ZDG_TESTS_ORACLES_HPP
#define ZDG_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <string>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace oracle {

using Edge = std::pair<std::size_t, std::size_t>;

/// Fresh O(n^2) zero-divisor scan: x in Z(R) iff x*y = 0 for some y != 0.
inline std::vector<bool> zero_divisor_flags(const zdg::Ring& r) {
  std::vector<bool> out(r.order(), false);
  for (zdg::ElementIndex x = 0; x < r.order(); ++x) {
    for (zdg::ElementIndex y = 1; y < r.order(); ++y) {
      if (r.mul(x, y) == 0) out[x] = true;
    }
  }
  return out;
}

/// Z_k via gcd: x is a zero-divisor iff gcd(x, k) > 1 (or x = 0).
inline bool zn_zero_divisor(std::uint64_t x, std::uint64_t k) { return x % k == 0 || std::gcd(x, k) > 1; }

inline std::size_t zn_zero_divisor_star_count(std::uint64_t k) {
  std::size_t c = 0;
  for (std::uint64_t x = 1; x < k; ++x) c += zn_zero_divisor(x, k) ? 1 : 0;
  return c;
}

/// Is the extended graph of Z_k a complete graph, by gcd arithmetic.
inline bool zn_tilde_complete(std::uint64_t k) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t x = 1; x < k; ++x) {
    if (zn_zero_divisor(x, k)) v.push_back(x);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if ((v[i] * v[j]) % k != 0 && !zn_zero_divisor(v[i] + v[j], k)) return false;
    }
  }
  return true;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Floyd-Warshall distances; SIZE_MAX for unreachable.
inline std::vector<std::vector<std::size_t>> floyd(const zdg::AdjacencyMatrix& g) {
  constexpr std::size_t kInf = static_cast<std::size_t>(-1) / 4;
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j)) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= kInf) x = static_cast<std::size_t>(-1);
    }
  }
  return d;
}

/// True iff g has a simple cycle of exactly `length` vertices, by bounded
/// depth-first search from each smallest-vertex start.
inline bool has_cycle_of_length(const zdg::AdjacencyMatrix& g, std::size_t length) {
  const std::size_t n = g.size();
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    if (path.size() == length) return g(u, path.front());
    for (std::size_t w = path.front() + 1; w < n; ++w) {
      if (!g(u, w) || on[w]) continue;
      path.push_back(w);
      on[w] = true;
      const bool found = dfs(w);
      on[w] = false;
      path.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    const bool found = dfs(s);
    on[s] = false;
    if (found) return true;
  }
  return false;
}

/// Shortest simple cycle by exhaustive search over lengths; 0 means acyclic.
inline std::size_t girth_by_enumeration(const zdg::AdjacencyMatrix& g) {
  for (std::size_t len = 3; len <= g.size(); ++len) {
    if (has_cycle_of_length(g, len)) return len;
  }
  return 0;
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle (connected with
/// every induced degree equal to 2). Exponential; for graphs of <= ~16 vertices.
inline bool chordal_by_enumeration(const zdg::AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    bool all_two = true;
    std::size_t first = n;
    for (std::size_t v = 0; v < n && all_two; ++v) {
      if (!((mask >> v) & 1U)) continue;
      if (first == n) first = v;
      std::size_t deg = 0;
      for (std::size_t u = 0; u < n; ++u) deg += ((mask >> u) & 1U) && g(v, u) ? 1 : 0;
      all_two = deg == 2;
    }
    if (!all_two) continue;
    // 2-regular; it is a single cycle iff connected.
    std::uint32_t seen = 1U << first, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!((frontier >> v) & 1U)) continue;
        for (std::size_t u = 0; u < n; ++u) {
          if (((mask >> u) & 1U) && g(v, u) && !((seen >> u) & 1U)) next |= 1U << u;
        }
      }
      seen |= next;
      frontier = next;
    }
    if (seen == mask) return false;
  }
  return true;
}

inline zdg::AdjacencyMatrix from_edges(std::size_t n, const std::vector<Edge>& edges) {
  zdg::AdjacencyMatrix g(n);
  for (auto [a, b] : edges) g.connect(a, b);
  return g;
}

inline zdg::AdjacencyMatrix random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  zdg::AdjacencyMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.connect(i, j);
    }
  }
  return g;
}

/// Relabels g by a permutation: result(perm[i], perm[j]) = g(i, j).
inline zdg::AdjacencyMatrix permuted(const zdg::AdjacencyMatrix& g, const std::vector<std::size_t>& perm) {
  zdg::AdjacencyMatrix h(g.size());
  for (auto [a, b] : g.edges()) h.connect(perm[a], perm[b]);
  return h;
}

/// Edge set as label pairs, each pair sorted.
inline std::set<std::pair<std::string, std::string>> label_edges(const zdg::ZeroDivisorGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [i, j] : g.adjacency.edges()) {
    auto a = g.labels[i], b = g.labels[j];
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

inline std::set<std::pair<std::string, std::string>> label_set(
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [x, y] : pairs) {
    std::string a = x, b = y;
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

}  // namespace oracle

#endif  // ZDG_TESTS_ORACLES_HPP
