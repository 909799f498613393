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

#ifndef ZDG_METRICS_HPP
#define ZDG_METRICS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// A path length or cycle length that may be infinite.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(std::size_t v) : value_(v), finite_(true) {}
  static constexpr Length infinity() { return Length{}; }

  constexpr bool is_finite() const { return finite_; }
  /// Meaningful only when finite.
  constexpr std::size_t value() const { return value_; }

  constexpr bool operator==(const Length&) const = default;
  constexpr std::strong_ordering operator<=>(const Length& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return finite_ ? value_ <=> o.value_ : std::strong_ordering::equal;
  }

 private:
  std::size_t value_ = 0;
  bool finite_ = false;
};

/// Decimal value, or "inf".
std::string to_string(Length d);

Length distance(const AdjacencyMatrix& g, std::size_t u, std::size_t v);
Length distance(const ZeroDivisorGraph& g, std::string_view u, std::string_view v);

/// BFS distance rows; entry [u][v] is infinite when v is unreachable from u.
std::vector<std::vector<Length>> all_pairs_distances(const AdjacencyMatrix& g);

bool is_connected(const AdjacencyMatrix& g);

/// Maximum distance over distinct pairs; 0 for graphs with at most one vertex.
Length diameter(const AdjacencyMatrix& g);

/// Shortest cycle length; infinite for forests.
Length girth(const AdjacencyMatrix& g);

bool is_complete(const AdjacencyMatrix& g);

/// Vertices adjacent to all others. A single vertex is universal.
std::vector<std::size_t> universal_vertices(const AdjacencyMatrix& g);

struct TriangleCheck {
  bool holds = true;
  /// Per vertex: a triangle {v, a, b} through it, or nullopt.
  std::vector<std::optional<std::array<std::size_t, 3>>> witnesses;
};
TriangleCheck every_vertex_in_triangle(const AdjacencyMatrix& g);

/// For each non-adjacent pair (x, y): z and t with x-z-y-t-x a 4-cycle.
/// The square may have a z-t chord.
struct SquareWitness {
  std::size_t x, y, z, t;
};
struct SquareCheck {
  bool holds = true;
  std::vector<SquareWitness> witnesses;
  /// First non-adjacent pair without a square.
  std::optional<std::pair<std::size_t, std::size_t>> failure;
};
SquareCheck square_property(const AdjacencyMatrix& g);

/// Every 2-path x-z-y has x~y or a second midpoint t != z.
bool is_hypotriangulated(const AdjacencyMatrix& g);

/// Maximum cardinality search visit order (first visited first); ties go to
/// the smallest vertex index.
std::vector<std::size_t> maximum_cardinality_search(const AdjacencyMatrix& g);

struct ChordalityCheck {
  bool is_chordal = true;
  /// Present iff not chordal; length >= 4 and verified chordless.
  std::optional<std::vector<std::size_t>> chordless_cycle;
};
ChordalityCheck check_chordal(const AdjacencyMatrix& g);

bool is_chordal(const AdjacencyMatrix& g);
std::optional<std::vector<std::size_t>> chordless_cycle_witness(const AdjacencyMatrix& g);

/// Consecutive vertices (cyclically) adjacent and all other pairs
/// non-adjacent. Throws std::invalid_argument for a cycle shorter than 4, a
/// repeated vertex, or an out-of-range vertex.
bool verify_cycle_chordless(const AdjacencyMatrix& g, const std::vector<std::size_t>& cycle);
bool verify_cycle_chordless(const ZeroDivisorGraph& g, const std::vector<std::string>& cycle);

struct AnalysisReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool is_connected = true;
  Length diameter;
  Length girth;
  bool is_complete = true;
  std::vector<std::string> universal_vertices;
  bool every_vertex_in_triangle = true;
  bool square_property_holds = true;
  bool is_hypotriangulated = true;
  bool is_chordal = true;
  std::optional<std::vector<std::string>> chordless_cycle_witness;
};

AnalysisReport analyze(const ZeroDivisorGraph& g);

}  // namespace zdg

#endif  // ZDG_METRICS_HPP
