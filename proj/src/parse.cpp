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

#include <cctype>
#include <limits>
#include <map>

#include "zdg/number_theory.hpp"
#include "zdg/ring.hpp"

namespace zdg {

std::string to_string(const RingSpec& spec) {
  std::string out;
  for (const auto& f : spec.factors()) {
    if (!out.empty()) out += " x ";
    if (const auto* z = std::get_if<Zn>(&f)) {
      out += "Z" + std::to_string(z->modulus);
    } else {
      const auto& q = std::get<QuotientPoly>(f);
      out += "Z" + std::to_string(q.prime) + "[x]/(" + to_string(q.modulus) + ")";
    }
  }
  return out;
}

namespace {

// Recursive-descent parser over the input with whitespace removed; positions
// reported in errors refer to the original text.
class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t order_cap) : order_cap_(order_cap) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
    end_offset_ = text.size();
  }

  RingSpec parse() {
    if (chars_.empty()) fail("empty ring spec");
    std::vector<RingSpec> parts{factor()};
    while (!at_end()) {
      if (peek() != 'x' && peek() != 'X') fail(std::string("expected ' x ' between factors, found '") + peek() + "'");
      ++pos_;
      parts.push_back(factor());
    }
    RingSpec spec = parts.size() == 1 ? parts.front() : RingSpec::product(parts);
    if (spec.order() > order_cap_) {
      throw CapExceeded("ring order " + std::to_string(spec.order()) + " exceeds the cap " + std::to_string(order_cap_));
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    const std::size_t offset = at < offsets_.size() ? offsets_[at] : end_offset_;
    throw ParseError("ring spec: " + msg + " at position " + std::to_string(offset), offset);
  }

  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }

  void expect(std::string_view token) {
    for (char c : token) {
      if (peek() != c) fail(std::string("expected '") + c + "'");
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    if (chars_.size() - pos_ < token.size()) return false;
    for (std::size_t i = 0; i < token.size(); ++i) {
      if (chars_[pos_ + i] != token[i]) return false;
    }
    pos_ += token.size();
    return true;
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  RingSpec factor() {
    if (accept("GF(")) {
      const std::size_t num_at = pos_;
      const std::uint64_t q = integer();
      expect(")");
      const auto pp = as_prime_power(q);
      if (!pp) fail_at(num_at, "GF order " + std::to_string(q) + " is not a prime power");
      if (saturating_pow(pp->prime, pp->exponent) > order_cap_) fail_at(num_at, "GF order exceeds the cap");
      const auto p = static_cast<std::uint32_t>(pp->prime);
      return RingSpec::quotient(p, least_irreducible(p, static_cast<int>(pp->exponent)));
    }
    if (peek() != 'Z') fail("expected 'Z' or 'GF('");
    ++pos_;
    const std::size_t num_at = pos_;
    const std::uint64_t n = integer();
    if (peek() != '[') {
      if (n < 2) fail_at(num_at, "Z_n requires n >= 2");
      return RingSpec::zn(n);
    }
    expect("[x]/(");
    if (!is_prime(n) || n > std::numeric_limits<std::uint32_t>::max()) {
      fail_at(num_at, "polynomial quotient base " + std::to_string(n) + " is not prime");
    }
    const auto p = static_cast<std::uint32_t>(n);
    const std::size_t poly_at = pos_;
    Poly f = polynomial(p);
    expect(")");
    if (f.degree() < 1) fail_at(poly_at, "modulus polynomial must have degree >= 1");
    return RingSpec::quotient(p, std::move(f));
  }

  // poly := term (('+'|'-') term)* ; term := [int ['*']] ['x' ['^' int]]
  Poly polynomial(std::uint32_t p) {
    std::map<std::uint64_t, std::int64_t> terms;  // exponent -> integer coefficient
    const std::size_t poly_at = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      std::int64_t coeff = 1;
      bool has_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = static_cast<std::int64_t>(integer() % p);
        has_coeff = true;
        if (peek() == '*') {
          ++pos_;
          if (peek() != 'x') fail("expected 'x' after '*'");
        }
      }
      std::uint64_t exponent = 0;
      if (peek() == 'x') {
        ++pos_;
        exponent = 1;
        if (peek() == '^') {
          ++pos_;
          exponent = integer();
          if (exponent > 64) fail("exponent too large");
        }
      } else if (!has_coeff) {
        fail("expected a polynomial term in x");
      }
      terms[exponent] += negative ? -coeff : coeff;
      if (peek() == '+') {
        negative = false;
      } else if (peek() == '-') {
        negative = true;
      } else {
        break;
      }
      ++pos_;
    }

    // The leading written term decides monicity, before reduction mod p.
    std::uint64_t top = 0;
    bool any = false;
    for (const auto& [e, c] : terms) {
      if (c != 0) {
        top = e;
        any = true;
      }
    }
    if (!any) fail_at(poly_at, "modulus polynomial is zero");
    const auto reduce = [p](std::int64_t c) {
      const auto m = static_cast<std::int64_t>(p);
      return static_cast<std::uint32_t>(((c % m) + m) % m);
    };
    if (reduce(terms[top]) != 1) fail_at(poly_at, "modulus polynomial is not monic");
    std::vector<std::uint32_t> coeffs(top + 1, 0);
    for (const auto& [e, c] : terms) coeffs[e] = reduce(c);
    return Poly(std::move(coeffs));
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
  std::size_t order_cap_;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text, std::size_t order_cap) {
  return SpecParser(text, order_cap).parse();
}

}  // namespace zdg
