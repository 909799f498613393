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

#ifndef ZDG_CATALOG_HPP
#define ZDG_CATALOG_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

struct CatalogEntry {
  std::string name;
  RingSpec spec;

  bool operator==(const CatalogEntry&) const = default;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  /// "builtin", "zn-range", or the file path.
  std::string source;
  /// Informational messages, e.g. skipped primes.
  std::vector<std::string> notices;
};

/// Eighteen small rings whose graphs are worth keeping at hand.
Catalog builtin_catalog();

/// Line format: `[name =] spec`, `#` starts a comment, blank lines ignored.
/// An entry without a name is named by its spec text with spaces removed.
/// Throws ParseError (with line number) on bad specs or duplicate names.
Catalog parse_catalog(std::string_view text, std::string source = "text",
                      std::size_t order_cap = kDefaultOrderCap);
Catalog load_catalog(const std::filesystem::path& path, std::size_t order_cap = kDefaultOrderCap);

/// Z_n for every composite n in [lo, hi]; primes are skipped with a notice.
Catalog generate_zn_range(std::uint64_t lo, std::uint64_t hi, std::size_t order_cap = kDefaultOrderCap);

/// Inverse of parse_catalog: one `name = spec` line per entry.
std::string serialize_catalog(const Catalog& catalog);

}  // namespace zdg

#endif  // ZDG_CATALOG_HPP
