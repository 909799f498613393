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

#include "zdg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zdg {

std::size_t AdjacencyMatrix::degree(std::size_t i) const {
  std::size_t d = 0;
  for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t AdjacencyMatrix::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < n_; ++i) twice += degree(i);
  return twice / 2;
}

std::size_t AdjacencyMatrix::common_neighbor_count(std::size_t i, std::size_t j) const {
  auto a = row(i), b = row(j);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

std::vector<std::size_t> AdjacencyMatrix::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  auto r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> AdjacencyMatrix::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

AdjacencyMatrix complete_graph(std::size_t n) {
  AdjacencyMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.connect(i, j);
  }
  return g;
}

AdjacencyMatrix cycle_graph(std::size_t n) {
  AdjacencyMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) g.connect(i, (i + 1) % n);
  return g;
}

AdjacencyMatrix path_graph(std::size_t n) {
  AdjacencyMatrix g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.connect(i, i + 1);
  return g;
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Gamma:
      return "gamma";
    case GraphKind::ZStar:
      return "zstar";
    case GraphKind::Tilde:
      return "tilde";
  }
  return "?";
}

GraphKind parse_graph_kind(std::string_view text) {
  if (text == "gamma") return GraphKind::Gamma;
  if (text == "zstar") return GraphKind::ZStar;
  if (text == "tilde") return GraphKind::Tilde;
  throw std::invalid_argument("unknown graph kind '" + std::string(text) + "' (expected gamma, zstar or tilde)");
}

std::size_t ZeroDivisorGraph::vertex_index(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no vertex labelled '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

ZeroDivisorGraph build_graph(const Ring& ring, GraphKind kind) {
  const auto vertices = ring.zero_divisors_star();
  ZeroDivisorGraph g;
  g.kind = kind;
  g.ring_spec_text = to_string(ring.spec());
  g.adjacency = AdjacencyMatrix(vertices.size());
  for (ElementIndex v : vertices) g.labels.push_back(ring.label(v));

  const bool use_product = kind != GraphKind::ZStar;
  const bool use_sum = kind != GraphKind::Gamma;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const ElementIndex x = vertices[i], y = vertices[j];
      if ((use_product && ring.mul(x, y) == ring.zero()) || (use_sum && ring.is_zero_divisor(ring.add(x, y)))) {
        g.adjacency.connect(i, j);
      }
    }
  }
  return g;
}

ZeroDivisorGraph build_graph(const RingSpec& spec, GraphKind kind, std::size_t order_cap) {
  return build_graph(Ring(spec, order_cap), kind);
}

// ---------------------------------------------------------------------------
// Isomorphism: joint colour refinement followed by backtracking over
// colour-compatible candidates.

namespace {

// Refines degree colours of the disjoint union of g and h until stable.
std::vector<std::size_t> refine_colours(const AdjacencyMatrix& g, const AdjacencyMatrix& h) {
  const std::size_t n = g.size();
  std::vector<std::size_t> colour(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    colour[v] = g.degree(v);
    colour[n + v] = h.degree(v);
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::size_t> next(2 * n);
    for (std::size_t v = 0; v < 2 * n; ++v) {
      const bool in_g = v < n;
      const std::size_t local = in_g ? v : v - n;
      std::vector<std::size_t> sig;
      for (std::size_t u : (in_g ? g : h).neighbors(local)) sig.push_back(colour[in_g ? u : n + u]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(colour[v], std::move(sig));
      auto it = ids.try_emplace(std::move(key), ids.size()).first;
      next[v] = it->second;
    }
    colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const AdjacencyMatrix& g, const AdjacencyMatrix& h, std::vector<std::size_t> colour)
      : g_(g), h_(h), n_(g.size()), colour_(std::move(colour)), map_(n_, kNone), used_(n_, false) {
    std::vector<std::size_t> class_size(2 * n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) ++class_size[colour_[v]];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return class_size[colour_[a]] < class_size[colour_[b]];
    });
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c] || colour_[n_ + c] != colour_[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t u = order_[k];
        ok = g_(v, u) == h_(c, map_[u]);
      }
      if (!ok) continue;
      map_[v] = c;
      used_[c] = true;
      if (extend(depth + 1)) return true;
      used_[c] = false;
      map_[v] = kNone;
    }
    return false;
  }

  const AdjacencyMatrix& g_;
  const AdjacencyMatrix& h_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> graphs_isomorphic(const AdjacencyMatrix& g, const AdjacencyMatrix& h) {
  if (g.size() > kIsomorphismVertexCap || h.size() > kIsomorphismVertexCap) {
    throw CapExceeded("graphs_isomorphic: more than " + std::to_string(kIsomorphismVertexCap) + " vertices");
  }
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto colour = refine_colours(g, h);
  const std::size_t n = g.size();
  std::vector<std::size_t> hist_g(2 * n + 1, 0), hist_h(2 * n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++hist_g[colour[v]];
    ++hist_h[colour[n + v]];
  }
  if (hist_g != hist_h) return std::nullopt;
  auto map = IsoSearch(g, h, std::move(colour)).run();
  if (map && !is_isomorphism(g, h, *map)) throw std::logic_error("graphs_isomorphic: invalid witness");
  return map;
}

std::optional<std::vector<std::size_t>> graphs_isomorphic(const ZeroDivisorGraph& g, const ZeroDivisorGraph& h) {
  return graphs_isomorphic(g.adjacency, h.adjacency);
}

bool is_isomorphism(const AdjacencyMatrix& g, const AdjacencyMatrix& h, std::span<const std::size_t> map) {
  const std::size_t n = g.size();
  if (h.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j) != h(map[i], map[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

bool is_dot_id(std::string_view s) {
  if (s.empty()) return false;
  const bool numeral = std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (numeral) return true;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string dot_id(std::string_view s) {
  if (is_dot_id(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const ZeroDivisorGraph& g) {
  std::ostringstream out;
  out << "graph " << to_string(g.kind) << " {\n";
  out << "  label=" << dot_id(g.ring_spec_text) << ";\n";
  for (const auto& label : g.labels) out << "  " << dot_id(label) << ";\n";
  for (const auto& [i, j] : g.adjacency.edges()) {
    out << "  " << dot_id(g.labels[i]) << " -- " << dot_id(g.labels[j]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace zdg
