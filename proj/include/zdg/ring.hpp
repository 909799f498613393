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

#ifndef ZDG_RING_HPP
#define ZDG_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zdg/errors.hpp"
#include "zdg/poly.hpp"

namespace zdg {

/// Z_n, n >= 2.
struct Zn {
  std::uint64_t modulus;

  bool operator==(const Zn&) const = default;
};

/// Z_p[x]/(f) with p prime and f monic of degree >= 1.
struct QuotientPoly {
  std::uint32_t prime;
  Poly modulus;

  bool operator==(const QuotientPoly&) const = default;
};

using RingFactor = std::variant<Zn, QuotientPoly>;

std::uint64_t factor_order(const RingFactor& f);

/// A finite commutative ring written as a flat product of Z_n and
/// Z_p[x]/(f) factors. A one-factor spec is the factor itself.
class RingSpec {
 public:
  static RingSpec zn(std::uint64_t n);
  static RingSpec quotient(std::uint32_t prime, Poly modulus);
  /// Flattens nested products; requires at least two factors in total.
  static RingSpec product(const std::vector<RingSpec>& parts);

  explicit RingSpec(RingFactor factor);

  const std::vector<RingFactor>& factors() const { return factors_; }
  bool is_product() const { return factors_.size() > 1; }

  /// Saturates at UINT64_MAX.
  std::uint64_t order() const;

  bool operator==(const RingSpec&) const = default;

 private:
  RingSpec() = default;
  std::vector<RingFactor> factors_;
};

/// Canonical text form; parse_ring_spec(to_string(s)) == s.
std::string to_string(const RingSpec& spec);

/// Parses the ring grammar ("Z6", "Z2 x Z4", "Z2[x]/(x^2)", "GF(4)", ...).
/// Throws ParseError for malformed input and CapExceeded when the order
/// exceeds `order_cap`.
RingSpec parse_ring_spec(std::string_view text, std::size_t order_cap = kDefaultOrderCap);

/// Canonical element payload: one residue per Z_n factor, deg(f)
/// coefficients (constant term first) per quotient factor, concatenated in
/// factor order.
struct RingElement {
  std::vector<std::uint64_t> payload;

  auto operator<=>(const RingElement&) const = default;
};

using ElementIndex = std::uint32_t;

/// Enumerated view of a RingSpec. Elements are addressed by their position in
/// the deterministic enumeration order; index 0 is zero. Within a product the
/// first factor is the most significant digit, and a quotient element
/// sum c_i x^i is the digit sum c_i p^i, so Z2[x]/(x^2) enumerates as
/// 0, 1, x, x+1.
///
/// The zero-divisor set is computed once on first use and shared between
/// copies; all member functions are safe for concurrent calls.
class Ring {
 public:
  explicit Ring(RingSpec spec, std::size_t order_cap = kDefaultOrderCap);

  const RingSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }

  ElementIndex zero() const { return 0; }
  ElementIndex one() const { return one_; }

  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex neg(ElementIndex a) const;

  RingElement element(ElementIndex i) const;
  ElementIndex index_of(const RingElement& e) const;

  /// Labels look like "3", "(0,2)", "(1,x+1)".
  std::string label(ElementIndex i) const;

  bool is_zero_divisor(ElementIndex i) const;
  bool is_unit(ElementIndex i) const { return !is_zero_divisor(i); }

  /// Z(R)* in enumeration order.
  std::span<const ElementIndex> zero_divisors_star() const;

 private:
  struct FactorArith {
    std::uint64_t radix = 0;
    std::uint64_t modulus = 0;  // Z_n factors
    std::uint32_t prime = 0;    // quotient factors
    Poly poly;
    int degree = 0;
    std::vector<std::uint32_t> mul_table;

    bool is_quotient() const { return prime != 0; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
  };

  struct ZeroDivisorCache;

  std::uint64_t digit(ElementIndex i, std::size_t f) const {
    return (i / strides_[f]) % arith_[f].radix;
  }
  const ZeroDivisorCache& zero_divisor_cache() const;

  RingSpec spec_;
  std::size_t order_ = 0;
  ElementIndex one_ = 0;
  std::vector<FactorArith> arith_;
  std::vector<std::uint64_t> strides_;
  std::shared_ptr<ZeroDivisorCache> cache_;
};

// Element-level operations.
std::vector<RingElement> elements(const Ring& ring);
RingElement add(const Ring& ring, const RingElement& x, const RingElement& y);
RingElement mul(const Ring& ring, const RingElement& x, const RingElement& y);
RingElement neg(const Ring& ring, const RingElement& x);
bool is_zero_divisor(const Ring& ring, const RingElement& x);
std::vector<RingElement> zero_divisors_star(const Ring& ring);

/// Z(R) is closed under addition and under multiplication by ring elements.
bool zero_divisors_form_ideal(const Ring& ring);

/// Decomposition into local factors: Z_n splits by prime powers, Z_p[x]/(f)
/// splits along the irreducible factorization of f, and linear factors
/// become Z_p. One-factor results are returned bare.
RingSpec normalized_spec(const RingSpec& spec);

/// The local decomposition together with the CRT isomorphism:
/// `forward[i]` is the index, in Ring(normalized), of the image of element i.
struct Normalization {
  RingSpec normalized;
  std::vector<ElementIndex> forward;
};

Normalization normalize(const RingSpec& spec, std::size_t order_cap = kDefaultOrderCap);

struct RingProfile {
  std::uint64_t order = 0;
  std::uint64_t characteristic = 0;
  bool is_local = false;
  bool is_field = false;
  bool is_reduced = false;
  bool is_boolean = false;
  std::size_t maximal_ideal_count = 0;
  std::size_t num_zero_divisors_star = 0;
  std::size_t local_factor_count = 0;
  /// Number of local factors of the normalized spec that are fields.
  std::size_t field_factor_count = 0;
  std::size_t unit_count = 0;
};

RingProfile ring_profile(const Ring& ring);

}  // namespace zdg

#endif  // ZDG_RING_HPP
