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

#ifndef ZDG_GRAPH_HPP
#define ZDG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

/// Symmetric adjacency matrix with bit-packed rows and an empty diagonal.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  /// Adds the undirected edge i--j; loops are ignored.
  void connect(std::size_t i, std::size_t j) {
    if (i == j) return;
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }

  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  std::size_t common_neighbor_count(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

AdjacencyMatrix complete_graph(std::size_t n);
/// 0-1-...-(n-1)-0.
AdjacencyMatrix cycle_graph(std::size_t n);
AdjacencyMatrix path_graph(std::size_t n);

enum class GraphKind { Gamma, ZStar, Tilde };

/// "gamma", "zstar", "tilde".
std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view text);

struct ZeroDivisorGraph {
  GraphKind kind = GraphKind::Tilde;
  std::vector<std::string> labels;
  AdjacencyMatrix adjacency;
  std::string ring_spec_text;

  std::size_t vertex_count() const { return labels.size(); }
  /// Throws std::out_of_range for an unknown label.
  std::size_t vertex_index(std::string_view label) const;
};

/// Graph on Z(R)* in enumeration order. Gamma: xy = 0; ZStar: x + y in Z(R);
/// Tilde: either. Zero counts as a zero-divisor.
ZeroDivisorGraph build_graph(const Ring& ring, GraphKind kind);
ZeroDivisorGraph build_graph(const RingSpec& spec, GraphKind kind, std::size_t order_cap = kDefaultOrderCap);

inline constexpr std::size_t kIsomorphismVertexCap = 64;

/// Vertex bijection `map` with g(i,j) == h(map[i], map[j]) for all i, j, or
/// nullopt. Throws CapExceeded above kIsomorphismVertexCap vertices.
std::optional<std::vector<std::size_t>> graphs_isomorphic(const AdjacencyMatrix& g, const AdjacencyMatrix& h);
std::optional<std::vector<std::size_t>> graphs_isomorphic(const ZeroDivisorGraph& g, const ZeroDivisorGraph& h);

/// True iff `map` is a bijection preserving both edges and non-edges.
bool is_isomorphism(const AdjacencyMatrix& g, const AdjacencyMatrix& h, std::span<const std::size_t> map);

/// Graphviz text: one node statement per vertex, one edge per adjacent pair,
/// both in vertex order.
std::string export_dot(const ZeroDivisorGraph& g);

}  // namespace zdg

#endif  // ZDG_GRAPH_HPP
