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

#ifndef ZDG_POLY_HPP
#define ZDG_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zdg {

/// Polynomial over Z_p, coefficients stored constant term first. The zero
/// polynomial is the empty vector; otherwise the last coefficient is nonzero.
struct Poly {
  std::vector<std::uint32_t> coeffs;

  Poly() = default;
  explicit Poly(std::vector<std::uint32_t> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  bool operator==(const Poly&) const = default;
};

/// Orders by degree, then by coefficient tuple read from the constant term up.
bool poly_less(const Poly& a, const Poly& b);

Poly poly_add(std::uint32_t p, const Poly& a, const Poly& b);
Poly poly_mul(std::uint32_t p, const Poly& a, const Poly& b);
Poly poly_pow(std::uint32_t p, const Poly& a, unsigned e);

/// Remainder of a modulo a monic divisor.
Poly poly_mod(std::uint32_t p, const Poly& a, const Poly& monic_divisor);

/// Quotient and remainder of a by a monic divisor.
std::pair<Poly, Poly> poly_divmod(std::uint32_t p, const Poly& a, const Poly& monic_divisor);

/// All monic polynomials of the given degree, in lexicographic order of the
/// coefficient tuple (c0, c1, ..., c_{d-1}) with c0 most significant.
std::vector<Poly> monic_polys(std::uint32_t p, int degree);

/// Irreducibility by trial division against every monic polynomial of degree
/// 1 .. deg/2.
bool is_irreducible(std::uint32_t p, const Poly& f);

/// Lexicographically least monic irreducible polynomial of the given degree.
Poly least_irreducible(std::uint32_t p, int degree);

struct PolyFactor {
  Poly factor;
  unsigned multiplicity;

  bool operator==(const PolyFactor&) const = default;
};

inline constexpr int kDefaultFactorDegreeCap = 8;

/// Factors a monic polynomial over Z_p into monic irreducibles, ordered by
/// poly_less. Throws CapExceeded when deg f > max_degree and
/// std::invalid_argument for non-prime p or non-monic f.
std::vector<PolyFactor> factor_poly_mod_p(std::uint32_t p, const Poly& f,
                                          int max_degree = kDefaultFactorDegreeCap);

/// Encodes a reduced polynomial (degree < width) as sum c_i p^i.
std::uint64_t poly_encode(std::uint32_t p, const Poly& a);
Poly poly_decode(std::uint32_t p, std::uint64_t value);

/// Renders as "x^2+x+1", "2x+1", "0".
std::string to_string(const Poly& a, char var = 'x');

}  // namespace zdg

#endif  // ZDG_POLY_HPP
