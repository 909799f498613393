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

#ifndef ZDG_ERRORS_HPP
#define ZDG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdg {

/// Default bound on the number of ring elements any operation will enumerate.
inline constexpr std::size_t kDefaultOrderCap = 4096;

/// Raised when an input exceeds a configured size bound (ring order,
/// polynomial degree, graph size, sieve bound).
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed ring-spec or catalog text. `position()` is a 0-based character
/// offset into the parsed text; `line()` is 1-based and 0 when not applicable.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : std::invalid_argument(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

}  // namespace zdg

#endif  // ZDG_ERRORS_HPP
