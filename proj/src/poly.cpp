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

#include "zdg/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

namespace {

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<std::uint32_t> c) : coeffs(std::move(c)) { trim(coeffs); }

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs < b.coeffs;
}

Poly poly_add(std::uint32_t p, const Poly& a, const Poly& b) {
  std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t s = 0;
    if (i < a.coeffs.size()) s += a.coeffs[i];
    if (i < b.coeffs.size()) s += b.coeffs[i];
    c[i] = static_cast<std::uint32_t>(s % p);
  }
  return Poly(std::move(c));
}

Poly poly_mul(std::uint32_t p, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p;
    }
  }
  return Poly(std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

Poly poly_pow(std::uint32_t p, const Poly& a, unsigned e) {
  Poly r({1});
  for (unsigned i = 0; i < e; ++i) r = poly_mul(p, r, a);
  return r;
}

std::pair<Poly, Poly> poly_divmod(std::uint32_t p, const Poly& a, const Poly& monic_divisor) {
  if (!monic_divisor.is_monic()) throw std::invalid_argument("poly_divmod: divisor must be monic");
  const int dd = monic_divisor.degree();
  std::vector<std::uint32_t> rem = a.coeffs;
  if (a.degree() < dd) return {Poly{}, a};
  std::vector<std::uint32_t> quot(rem.size() - dd, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const std::uint32_t lead = rem[i];
    if (lead == 0) continue;
    quot[i - dd] = lead;
    for (int j = 0; j <= dd; ++j) {
      const std::uint64_t sub = std::uint64_t{lead} * monic_divisor.coeffs[j] % p;
      rem[i - dd + j] = static_cast<std::uint32_t>((rem[i - dd + j] + p - sub) % p);
    }
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(std::uint32_t p, const Poly& a, const Poly& monic_divisor) {
  return poly_divmod(p, a, monic_divisor).second;
}

std::vector<Poly> monic_polys(std::uint32_t p, int degree) {
  const std::uint64_t count = saturating_pow(p, static_cast<unsigned>(degree));
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    std::uint64_t v = idx;
    // c_{degree-1} is the least significant digit, c0 the most significant.
    for (int i = degree - 1; i >= 0; --i) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    c[degree] = 1;
    out.emplace_back(std::move(c));
  }
  return out;
}

bool is_irreducible(std::uint32_t p, const Poly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const Poly& g : monic_polys(p, d)) {
      if (poly_mod(p, f, g).is_zero()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, int degree) {
  for (const Poly& g : monic_polys(p, degree)) {
    if (is_irreducible(p, g)) return g;
  }
  throw std::logic_error("least_irreducible: none found");
}

std::vector<PolyFactor> factor_poly_mod_p(std::uint32_t p, const Poly& f, int max_degree) {
  if (!is_prime(p)) throw std::invalid_argument("factor_poly_mod_p: modulus " + std::to_string(p) + " is not prime");
  if (!f.is_monic()) throw std::invalid_argument("factor_poly_mod_p: polynomial is not monic");
  if (f.degree() > max_degree) {
    throw CapExceeded("factor_poly_mod_p: degree " + std::to_string(f.degree()) + " exceeds cap " +
                      std::to_string(max_degree));
  }
  std::vector<PolyFactor> out;
  Poly rest = f;
  // Divisors are tried in increasing degree, so any divisor found has no
  // smaller factor left and is irreducible.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& g : monic_polys(p, d)) {
      unsigned mult = 0;
      for (;;) {
        auto [q, r] = poly_divmod(p, rest, g);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  if (rest.degree() >= 1) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });

  Poly check({1});
  for (const auto& [g, m] : out) {
    if (!is_irreducible(p, g)) throw std::logic_error("factor_poly_mod_p: reducible factor " + to_string(g));
    check = poly_mul(p, check, poly_pow(p, g, m));
  }
  if (!(check == f)) throw std::logic_error("factor_poly_mod_p: factor product mismatch");
  return out;
}

std::uint64_t poly_encode(std::uint32_t p, const Poly& a) {
  std::uint64_t v = 0;
  for (int i = a.degree(); i >= 0; --i) v = v * p + a.coeffs[i];
  return v;
}

Poly poly_decode(std::uint32_t p, std::uint64_t value) {
  std::vector<std::uint32_t> c;
  while (value > 0) {
    c.push_back(static_cast<std::uint32_t>(value % p));
    value /= p;
  }
  return Poly(std::move(c));
}

std::string to_string(const Poly& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const std::uint32_t c = a.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace zdg
