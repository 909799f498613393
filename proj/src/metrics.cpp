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

#include "zdg/metrics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace zdg {

std::string to_string(Length d) { return d.is_finite() ? std::to_string(d.value()) : "inf"; }

namespace {

std::vector<Length> bfs(const AdjacencyMatrix& g, std::size_t source) {
  const std::size_t n = g.size(), words = g.words_per_row();
  std::vector<Length> dist(n, Length::infinity());
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words);
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier = visited;
  dist[source] = Length(0);
  for (std::size_t level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const auto r = g.row(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      any = any || next[w] != 0;
      for (std::uint64_t bits = next[w]; bits != 0; bits &= bits - 1) {
        dist[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))] = Length(level);
      }
    }
    if (!any) break;
    frontier.swap(next);
  }
  return dist;
}

std::optional<std::size_t> first_common_neighbor(const AdjacencyMatrix& g, std::size_t a, std::size_t b,
                                                 std::size_t skip = static_cast<std::size_t>(-1)) {
  auto ra = g.row(a), rb = g.row(b);
  for (std::size_t w = 0; w < g.words_per_row(); ++w) {
    for (std::uint64_t bits = ra[w] & rb[w]; bits != 0; bits &= bits - 1) {
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (v != skip) return v;
    }
  }
  return std::nullopt;
}

}  // namespace

Length distance(const AdjacencyMatrix& g, std::size_t u, std::size_t v) {
  if (u >= g.size() || v >= g.size()) throw std::out_of_range("distance: vertex out of range");
  return bfs(g, u)[v];
}

Length distance(const ZeroDivisorGraph& g, std::string_view u, std::string_view v) {
  return distance(g.adjacency, g.vertex_index(u), g.vertex_index(v));
}

std::vector<std::vector<Length>> all_pairs_distances(const AdjacencyMatrix& g) {
  std::vector<std::vector<Length>> out;
  out.reserve(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) out.push_back(bfs(g, s));
  return out;
}

bool is_connected(const AdjacencyMatrix& g) {
  if (g.size() <= 1) return true;
  const auto d = bfs(g, 0);
  return std::all_of(d.begin(), d.end(), [](Length x) { return x.is_finite(); });
}

Length diameter(const AdjacencyMatrix& g) {
  Length best(0);
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (Length d : bfs(g, s)) best = std::max(best, d);
    if (!best.is_finite()) break;
  }
  return best;
}

Length girth(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.neighbors(i)) {
      if (j > i && first_common_neighbor(g, i, j)) return Length(3);
    }
  }
  // Triangle-free: BFS from every root; a non-tree edge u-w closes a cycle of
  // length dist(u) + dist(w) + 1, and the minimum over all roots is exact.
  Length best = Length::infinity();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[root] = 0;
    parent[root] = kUnset;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(u)) {
        if (dist[w] == kUnset) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, Length(dist[u] + dist[w] + 1));
        }
      }
    }
  }
  return best;
}

bool is_complete(const AdjacencyMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) + 1 != g.size()) return false;
  }
  return true;
}

std::vector<std::size_t> universal_vertices(const AdjacencyMatrix& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) + 1 == g.size()) out.push_back(i);
  }
  return out;
}

TriangleCheck every_vertex_in_triangle(const AdjacencyMatrix& g) {
  TriangleCheck out;
  out.witnesses.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t a : g.neighbors(v)) {
      if (auto b = first_common_neighbor(g, v, a)) {
        out.witnesses[v] = std::array<std::size_t, 3>{v, a, *b};
        break;
      }
    }
    if (!out.witnesses[v]) out.holds = false;
  }
  return out;
}

SquareCheck square_property(const AdjacencyMatrix& g) {
  SquareCheck out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = x + 1; y < g.size(); ++y) {
      if (g(x, y)) continue;
      const auto z = first_common_neighbor(g, x, y);
      const auto t = z ? first_common_neighbor(g, x, y, *z) : std::nullopt;
      if (!t) {
        out.holds = false;
        if (!out.failure) out.failure = std::make_pair(x, y);
        continue;
      }
      out.witnesses.push_back({x, y, *z, *t});
    }
  }
  return out;
}

bool is_hypotriangulated(const AdjacencyMatrix& g) {
  // A non-adjacent pair with exactly one common neighbour is a 2-path with no
  // alternative midpoint.
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = x + 1; y < g.size(); ++y) {
      if (!g(x, y) && g.common_neighbor_count(x, y) == 1) return false;
    }
  }
  return true;
}

std::vector<std::size_t> maximum_cardinality_search(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0), order;
  std::vector<bool> done(n, false);
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    done[best] = true;
    order.push_back(best);
    for (std::size_t u : g.neighbors(best)) {
      if (!done[u]) ++weight[u];
    }
  }
  return order;
}

namespace {

// Looks for a chordless cycle through `centre`: two non-adjacent neighbours
// a, b of the centre joined by a path avoiding the centre's closed
// neighbourhood. A shortest such path closes an induced cycle.
std::optional<std::vector<std::size_t>> chordless_cycle_through(const AdjacencyMatrix& g, std::size_t centre) {
  const std::size_t n = g.size();
  constexpr std::size_t kOutside = static_cast<std::size_t>(-1);
  std::vector<bool> closed(n, false);
  closed[centre] = true;
  const auto nbrs = g.neighbors(centre);
  for (std::size_t a : nbrs) closed[a] = true;

  // Components of g minus the closed neighbourhood.
  std::vector<std::size_t> comp(n, kOutside);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (closed[s] || comp[s] != kOutside) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = comps;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(u)) {
        if (!closed[w] && comp[w] == kOutside) {
          comp[w] = comps;
          queue.push_back(w);
        }
      }
    }
    ++comps;
  }
  if (comps == 0) return std::nullopt;

  std::vector<std::vector<bool>> touches(nbrs.size(), std::vector<bool>(comps, false));
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t w : g.neighbors(nbrs[i])) {
      if (comp[w] != kOutside) touches[i][comp[w]] = true;
    }
  }

  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const std::size_t a = nbrs[i], b = nbrs[j];
      if (g(a, b)) continue;
      for (std::size_t c = 0; c < comps; ++c) {
        if (!touches[i][c] || !touches[j][c]) continue;
        // Shortest a -> b path with interior inside component c.
        std::vector<std::size_t> prev(n, kOutside);
        std::deque<std::size_t> queue{a};
        prev[a] = a;
        while (!queue.empty() && prev[b] == kOutside) {
          const std::size_t u = queue.front();
          queue.pop_front();
          for (std::size_t w : g.neighbors(u)) {
            if (prev[w] != kOutside) continue;
            if (w == b ? u != a : comp[w] == c) {
              prev[w] = u;
              queue.push_back(w);
            }
          }
        }
        std::vector<std::size_t> path;
        for (std::size_t v = b; v != a; v = prev[v]) path.push_back(v);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        std::vector<std::size_t> cycle{centre};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ChordalityCheck check_chordal(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  const auto visit = maximum_cardinality_search(g);
  // Elimination order is the reverse visit order, so the later-eliminated
  // neighbours of v are those visited before it.
  std::vector<std::size_t> visit_pos(n);
  for (std::size_t i = 0; i < n; ++i) visit_pos[visit[i]] = i;

  std::optional<std::size_t> failing;
  for (std::size_t v = 0; v < n && !failing; ++v) {
    std::vector<std::size_t> later;
    for (std::size_t u : g.neighbors(v)) {
      if (visit_pos[u] < visit_pos[v]) later.push_back(u);
    }
    if (later.size() < 2) continue;
    const std::size_t parent = *std::max_element(later.begin(), later.end(), [&](std::size_t a, std::size_t b) {
      return visit_pos[a] < visit_pos[b];
    });
    for (std::size_t w : later) {
      if (w != parent && !g(parent, w)) {
        failing = v;
        break;
      }
    }
  }

  ChordalityCheck out;
  if (!failing) return out;
  out.is_chordal = false;
  out.chordless_cycle = chordless_cycle_through(g, *failing);
  for (std::size_t c = 0; c < n && !out.chordless_cycle; ++c) out.chordless_cycle = chordless_cycle_through(g, c);
  if (!out.chordless_cycle || !verify_cycle_chordless(g, *out.chordless_cycle)) {
    throw std::logic_error("check_chordal: failed to extract a chordless cycle");
  }
  return out;
}

bool is_chordal(const AdjacencyMatrix& g) { return check_chordal(g).is_chordal; }

std::optional<std::vector<std::size_t>> chordless_cycle_witness(const AdjacencyMatrix& g) {
  return check_chordal(g).chordless_cycle;
}

bool verify_cycle_chordless(const AdjacencyMatrix& g, const std::vector<std::size_t>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) throw std::invalid_argument("verify_cycle_chordless: cycle needs at least 4 vertices");
  std::vector<bool> seen(g.size(), false);
  for (std::size_t v : cycle) {
    if (v >= g.size()) throw std::invalid_argument("verify_cycle_chordless: vertex out of range");
    if (seen[v]) throw std::invalid_argument("verify_cycle_chordless: repeated vertex");
    seen[v] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool verify_cycle_chordless(const ZeroDivisorGraph& g, const std::vector<std::string>& cycle) {
  std::vector<std::size_t> idx;
  for (const auto& label : cycle) {
    try {
      idx.push_back(g.vertex_index(label));
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return verify_cycle_chordless(g.adjacency, idx);
}

AnalysisReport analyze(const ZeroDivisorGraph& g) {
  const auto& adj = g.adjacency;
  AnalysisReport r;
  r.vertex_count = adj.size();
  r.edge_count = adj.edge_count();
  r.is_connected = is_connected(adj);
  r.diameter = diameter(adj);
  r.girth = girth(adj);
  r.is_complete = is_complete(adj);
  for (std::size_t v : universal_vertices(adj)) r.universal_vertices.push_back(g.labels[v]);
  r.every_vertex_in_triangle = every_vertex_in_triangle(adj).holds;
  r.square_property_holds = square_property(adj).holds;
  r.is_hypotriangulated = is_hypotriangulated(adj);
  const auto chordal = check_chordal(adj);
  r.is_chordal = chordal.is_chordal;
  if (chordal.chordless_cycle) {
    std::vector<std::string> labels;
    for (std::size_t v : *chordal.chordless_cycle) labels.push_back(g.labels[v]);
    r.chordless_cycle_witness = std::move(labels);
  }
  return r;
}

}  // namespace zdg
