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

#include "zdg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zdg/number_theory.hpp"

namespace zdg {

namespace {

std::string strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string compact(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

Catalog builtin_catalog() {
  static const char* const kSpecs[] = {
      "Z4",          "Z6",          "Z8",          "Z9",
      "Z10",         "Z12",         "Z16",         "Z22",
      "Z169",        "Z390",        "Z2 x Z4",     "Z2 x Z2[x]/(x^2)",
      "Z3 x Z2[x]/(x^2)",           "Z4 x GF(4)",  "Z2[x]/(x^2) x GF(4)",
      "Z2 x Z2 x Z3",               "Z2 x Z2",     "Z2 x Z2 x Z2",
  };
  Catalog c;
  c.source = "builtin";
  for (const char* text : kSpecs) c.entries.push_back({compact(text), parse_ring_spec(text)});
  return c;
}

Catalog parse_catalog(std::string_view text, std::string source, std::size_t order_cap) {
  Catalog c;
  c.source = std::move(source);
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string body = strip(line);
    if (body.empty()) continue;

    std::string name, spec_text = body;
    if (auto eq = body.find('='); eq != std::string::npos) {
      name = strip(std::string_view(body).substr(0, eq));
      spec_text = strip(std::string_view(body).substr(eq + 1));
      if (name.empty()) throw ParseError("catalog line " + std::to_string(line_no) + ": empty name", 0, line_no);
    } else {
      name = compact(body);
    }
    RingSpec spec = [&] {
      try {
        return parse_ring_spec(spec_text, order_cap);
      } catch (const ParseError& e) {
        throw ParseError("catalog line " + std::to_string(line_no) + ": " + e.what(), e.position(), line_no);
      } catch (const CapExceeded& e) {
        throw CapExceeded("catalog line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    if (!names.insert(name).second) {
      throw ParseError("catalog line " + std::to_string(line_no) + ": duplicate name '" + name + "'", 0, line_no);
    }
    c.entries.push_back({std::move(name), std::move(spec)});
  }
  return c;
}

Catalog load_catalog(const std::filesystem::path& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), path.string(), order_cap);
}

Catalog generate_zn_range(std::uint64_t lo, std::uint64_t hi, std::size_t order_cap) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("generate_zn_range: need 2 <= lo <= hi");
  if (hi > order_cap) throw CapExceeded("generate_zn_range: hi exceeds the order cap " + std::to_string(order_cap));
  Catalog c;
  c.source = "zn-range";
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) {
      c.notices.push_back("skipping Z" + std::to_string(n) + ": field, empty graph");
      continue;
    }
    c.entries.push_back({"Z" + std::to_string(n), RingSpec::zn(n)});
  }
  return c;
}

std::string serialize_catalog(const Catalog& catalog) {
  std::string out;
  for (const auto& e : catalog.entries) out += e.name + " = " + to_string(e.spec) + "\n";
  return out;
}

}  // namespace zdg
