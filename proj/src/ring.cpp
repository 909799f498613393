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

#include "zdg/ring.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "zdg/number_theory.hpp"

namespace zdg {

namespace {

constexpr std::uint64_t kMulTableMaxRadix = 1024;

void validate(const RingFactor& f) {
  if (const auto* z = std::get_if<Zn>(&f)) {
    if (z->modulus < 2) throw std::invalid_argument("Z_n requires n >= 2");
    return;
  }
  const auto& q = std::get<QuotientPoly>(f);
  if (!is_prime(q.prime)) {
    throw std::invalid_argument("polynomial quotient base " + std::to_string(q.prime) + " is not prime");
  }
  if (q.modulus.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
  if (!q.modulus.is_monic()) throw std::invalid_argument("quotient modulus must be monic");
  for (auto c : q.modulus.coeffs) {
    if (c >= q.prime) throw std::invalid_argument("quotient modulus coefficient out of range");
  }
}

bool factor_is_field(const RingFactor& f) {
  if (const auto* z = std::get_if<Zn>(&f)) return is_prime(z->modulus);
  const auto& q = std::get<QuotientPoly>(f);
  return is_irreducible(q.prime, q.modulus);
}

}  // namespace

std::uint64_t factor_order(const RingFactor& f) {
  if (const auto* z = std::get_if<Zn>(&f)) return z->modulus;
  const auto& q = std::get<QuotientPoly>(f);
  return saturating_pow(q.prime, static_cast<unsigned>(q.modulus.degree()));
}

RingSpec::RingSpec(RingFactor factor) {
  validate(factor);
  factors_.push_back(std::move(factor));
}

RingSpec RingSpec::zn(std::uint64_t n) { return RingSpec(Zn{n}); }

RingSpec RingSpec::quotient(std::uint32_t prime, Poly modulus) {
  return RingSpec(QuotientPoly{prime, std::move(modulus)});
}

RingSpec RingSpec::product(const std::vector<RingSpec>& parts) {
  RingSpec out;
  for (const auto& part : parts) {
    out.factors_.insert(out.factors_.end(), part.factors_.begin(), part.factors_.end());
  }
  if (out.factors_.size() < 2) throw std::invalid_argument("a product needs at least two factors");
  return out;
}

std::uint64_t RingSpec::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors_) n = saturating_mul(n, factor_order(f));
  return n;
}

// ---------------------------------------------------------------------------
// Per-factor arithmetic on digit values.

std::uint64_t Ring::FactorArith::add(std::uint64_t a, std::uint64_t b) const {
  if (!is_quotient()) return (a + b) % modulus;
  std::uint64_t r = 0, place = 1;
  for (int i = 0; i < degree; ++i) {
    r += ((a % prime + b % prime) % prime) * place;
    a /= prime;
    b /= prime;
    place *= prime;
  }
  return r;
}

std::uint64_t Ring::FactorArith::neg(std::uint64_t a) const {
  if (!is_quotient()) return (modulus - a) % modulus;
  std::uint64_t r = 0, place = 1;
  for (int i = 0; i < degree; ++i) {
    r += ((prime - a % prime) % prime) * place;
    a /= prime;
    place *= prime;
  }
  return r;
}

std::uint64_t Ring::FactorArith::mul(std::uint64_t a, std::uint64_t b) const {
  if (!is_quotient()) return (a * b) % modulus;
  if (!mul_table.empty()) return mul_table[a * radix + b];
  const Poly prod = poly_mul(prime, poly_decode(prime, a), poly_decode(prime, b));
  return poly_encode(prime, poly_mod(prime, prod, poly));
}

struct Ring::ZeroDivisorCache {
  std::once_flag once;
  std::vector<std::uint8_t> flags;
  std::vector<ElementIndex> star;
};

Ring::Ring(RingSpec spec, std::size_t order_cap)
    : spec_(std::move(spec)), cache_(std::make_shared<ZeroDivisorCache>()) {
  const std::uint64_t order = spec_.order();
  if (order > order_cap) {
    throw CapExceeded("ring " + to_string(spec_) + " has order " + std::to_string(order) +
                      ", above the cap " + std::to_string(order_cap));
  }
  order_ = static_cast<std::size_t>(order);

  for (const auto& f : spec_.factors()) {
    FactorArith a;
    a.radix = factor_order(f);
    if (const auto* z = std::get_if<Zn>(&f)) {
      a.modulus = z->modulus;
    } else {
      const auto& q = std::get<QuotientPoly>(f);
      a.prime = q.prime;
      a.poly = q.modulus;
      a.degree = q.modulus.degree();
      if (a.radix <= kMulTableMaxRadix) {
        a.mul_table.resize(a.radix * a.radix);
        for (std::uint64_t x = 0; x < a.radix; ++x) {
          for (std::uint64_t y = 0; y < a.radix; ++y) {
            const Poly prod = poly_mul(a.prime, poly_decode(a.prime, x), poly_decode(a.prime, y));
            a.mul_table[x * a.radix + y] = static_cast<std::uint32_t>(poly_encode(a.prime, poly_mod(a.prime, prod, a.poly)));
          }
        }
      }
    }
    arith_.push_back(std::move(a));
  }

  strides_.assign(arith_.size(), 1);
  for (std::size_t f = arith_.size(); f-- > 1;) strides_[f - 1] = strides_[f] * arith_[f].radix;
  one_ = static_cast<ElementIndex>(std::accumulate(strides_.begin(), strides_.end(), std::uint64_t{0}));
}

ElementIndex Ring::add(ElementIndex a, ElementIndex b) const {
  if (arith_.size() == 1 && !arith_[0].is_quotient()) return static_cast<ElementIndex>((std::uint64_t{a} + b) % order_);
  std::uint64_t r = 0;
  for (std::size_t f = 0; f < arith_.size(); ++f) r += arith_[f].add(digit(a, f), digit(b, f)) * strides_[f];
  return static_cast<ElementIndex>(r);
}

ElementIndex Ring::mul(ElementIndex a, ElementIndex b) const {
  if (arith_.size() == 1 && !arith_[0].is_quotient()) return static_cast<ElementIndex>((std::uint64_t{a} * b) % order_);
  std::uint64_t r = 0;
  for (std::size_t f = 0; f < arith_.size(); ++f) r += arith_[f].mul(digit(a, f), digit(b, f)) * strides_[f];
  return static_cast<ElementIndex>(r);
}

ElementIndex Ring::neg(ElementIndex a) const {
  std::uint64_t r = 0;
  for (std::size_t f = 0; f < arith_.size(); ++f) r += arith_[f].neg(digit(a, f)) * strides_[f];
  return static_cast<ElementIndex>(r);
}

RingElement Ring::element(ElementIndex i) const {
  if (i >= order_) throw std::out_of_range("element index out of range");
  RingElement e;
  for (std::size_t f = 0; f < arith_.size(); ++f) {
    const std::uint64_t d = digit(i, f);
    if (!arith_[f].is_quotient()) {
      e.payload.push_back(d);
      continue;
    }
    std::uint64_t v = d;
    for (int k = 0; k < arith_[f].degree; ++k) {
      e.payload.push_back(v % arith_[f].prime);
      v /= arith_[f].prime;
    }
  }
  return e;
}

ElementIndex Ring::index_of(const RingElement& e) const {
  std::size_t pos = 0;
  std::uint64_t r = 0;
  for (std::size_t f = 0; f < arith_.size(); ++f) {
    const auto& a = arith_[f];
    std::uint64_t d = 0;
    if (!a.is_quotient()) {
      if (pos >= e.payload.size() || e.payload[pos] >= a.modulus) throw std::invalid_argument("element payload does not match ring");
      d = e.payload[pos++];
    } else {
      std::uint64_t place = 1;
      for (int k = 0; k < a.degree; ++k) {
        if (pos >= e.payload.size() || e.payload[pos] >= a.prime) throw std::invalid_argument("element payload does not match ring");
        d += e.payload[pos++] * place;
        place *= a.prime;
      }
    }
    r += d * strides_[f];
  }
  if (pos != e.payload.size()) throw std::invalid_argument("element payload does not match ring");
  return static_cast<ElementIndex>(r);
}

std::string Ring::label(ElementIndex i) const {
  std::string out;
  for (std::size_t f = 0; f < arith_.size(); ++f) {
    if (f > 0) out += ',';
    const std::uint64_t d = digit(i, f);
    out += arith_[f].is_quotient() ? to_string(poly_decode(arith_[f].prime, d)) : std::to_string(d);
  }
  return arith_.size() > 1 ? "(" + out + ")" : out;
}

const Ring::ZeroDivisorCache& Ring::zero_divisor_cache() const {
  std::call_once(cache_->once, [this] {
    auto& flags = cache_->flags;
    flags.assign(order_, 0);
    flags[0] = 1;
    for (ElementIndex a = 1; a < order_; ++a) {
      if (flags[a]) continue;
      for (ElementIndex b = 1; b < order_; ++b) {
        if (mul(a, b) == 0) {
          flags[a] = 1;
          flags[b] = 1;
          break;
        }
      }
    }
    for (ElementIndex a = 1; a < order_; ++a) {
      if (flags[a]) cache_->star.push_back(a);
    }
  });
  return *cache_;
}

bool Ring::is_zero_divisor(ElementIndex i) const { return zero_divisor_cache().flags.at(i) != 0; }

std::span<const ElementIndex> Ring::zero_divisors_star() const { return zero_divisor_cache().star; }

// ---------------------------------------------------------------------------

std::vector<RingElement> elements(const Ring& ring) {
  std::vector<RingElement> out;
  out.reserve(ring.order());
  for (ElementIndex i = 0; i < ring.order(); ++i) out.push_back(ring.element(i));
  return out;
}

RingElement add(const Ring& ring, const RingElement& x, const RingElement& y) {
  return ring.element(ring.add(ring.index_of(x), ring.index_of(y)));
}

RingElement mul(const Ring& ring, const RingElement& x, const RingElement& y) {
  return ring.element(ring.mul(ring.index_of(x), ring.index_of(y)));
}

RingElement neg(const Ring& ring, const RingElement& x) { return ring.element(ring.neg(ring.index_of(x))); }

bool is_zero_divisor(const Ring& ring, const RingElement& x) { return ring.is_zero_divisor(ring.index_of(x)); }

std::vector<RingElement> zero_divisors_star(const Ring& ring) {
  std::vector<RingElement> out;
  for (ElementIndex i : ring.zero_divisors_star()) out.push_back(ring.element(i));
  return out;
}

bool zero_divisors_form_ideal(const Ring& ring) {
  std::vector<ElementIndex> zd{ring.zero()};
  auto star = ring.zero_divisors_star();
  zd.insert(zd.end(), star.begin(), star.end());
  for (ElementIndex a : zd) {
    for (ElementIndex b : zd) {
      if (!ring.is_zero_divisor(ring.add(a, b))) return false;
    }
    for (ElementIndex r = 0; r < ring.order(); ++r) {
      if (!ring.is_zero_divisor(ring.mul(a, r))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Local decomposition.

namespace {

struct LocalPiece {
  RingFactor factor;
  std::function<std::uint64_t(std::uint64_t)> transport;  // source digit -> piece digit
};

std::vector<LocalPiece> split_factor(const RingFactor& f) {
  std::vector<LocalPiece> pieces;
  if (const auto* z = std::get_if<Zn>(&f)) {
    for (const auto& [p, e] : factorize(z->modulus)) {
      const std::uint64_t q = saturating_pow(p, e);
      pieces.push_back({Zn{q}, [q](std::uint64_t x) { return x % q; }});
    }
    return pieces;
  }
  const auto& qp = std::get<QuotientPoly>(f);
  const std::uint32_t p = qp.prime;
  for (const auto& [g, m] : factor_poly_mod_p(p, qp.modulus, qp.modulus.degree())) {
    const Poly power = poly_pow(p, g, m);
    if (power.degree() == 1) {
      // Z_p[x]/(x - r) is Z_p via evaluation at r.
      const std::uint64_t root = (p - power.coeffs[0]) % p;
      pieces.push_back({Zn{p}, [p, root](std::uint64_t x) {
                          std::uint64_t acc = 0;
                          const Poly a = poly_decode(p, x);
                          for (int i = a.degree(); i >= 0; --i) acc = (acc * root + a.coeffs[i]) % p;
                          return acc;
                        }});
    } else {
      pieces.push_back({QuotientPoly{p, power}, [p, power](std::uint64_t x) {
                          return poly_encode(p, poly_mod(p, poly_decode(p, x), power));
                        }});
    }
  }
  return pieces;
}

}  // namespace

RingSpec normalized_spec(const RingSpec& spec) {
  std::vector<RingSpec> parts;
  for (const auto& f : spec.factors()) {
    for (auto& piece : split_factor(f)) parts.emplace_back(std::move(piece.factor));
  }
  if (parts.size() == 1) return parts.front();
  return RingSpec::product(parts);
}

Normalization normalize(const RingSpec& spec, std::size_t order_cap) {
  const Ring source(spec, order_cap);
  std::vector<std::vector<LocalPiece>> pieces;
  std::vector<RingSpec> parts;
  for (const auto& f : spec.factors()) {
    pieces.push_back(split_factor(f));
    for (const auto& piece : pieces.back()) parts.emplace_back(piece.factor);
  }
  Normalization out{parts.size() == 1 ? parts.front() : RingSpec::product(parts), {}};

  std::vector<std::uint64_t> radix, source_radix;
  for (const auto& part : parts) radix.push_back(part.order());
  for (const auto& f : spec.factors()) source_radix.push_back(factor_order(f));

  out.forward.resize(source.order());
  for (ElementIndex i = 0; i < source.order(); ++i) {
    // Source digits, most significant factor first.
    std::vector<std::uint64_t> digits(source_radix.size());
    std::uint64_t rest = i;
    for (std::size_t f = source_radix.size(); f-- > 0;) {
      digits[f] = rest % source_radix[f];
      rest /= source_radix[f];
    }
    std::uint64_t target = 0;
    std::size_t k = 0;
    for (std::size_t f = 0; f < pieces.size(); ++f) {
      for (const auto& piece : pieces[f]) {
        target = target * radix[k] + piece.transport(digits[f]);
        ++k;
      }
    }
    out.forward[i] = static_cast<ElementIndex>(target);
  }
  return out;
}

RingProfile ring_profile(const Ring& ring) {
  RingProfile p;
  p.order = ring.order();

  p.characteristic = 1;
  for (ElementIndex x = ring.one(); x != ring.zero(); x = ring.add(x, ring.one())) ++p.characteristic;

  const RingSpec local = normalized_spec(ring.spec());
  p.local_factor_count = local.factors().size();
  p.maximal_ideal_count = p.local_factor_count;
  for (const auto& f : local.factors()) p.field_factor_count += factor_is_field(f) ? 1 : 0;
  p.is_local = p.local_factor_count == 1;

  p.num_zero_divisors_star = ring.zero_divisors_star().size();
  p.unit_count = p.order - p.num_zero_divisors_star - 1;
  p.is_field = p.is_local && p.num_zero_divisors_star == 0;

  // Powers of x are eventually periodic; x is nilpotent iff the orbit hits 0.
  p.is_reduced = true;
  std::vector<std::uint8_t> seen(ring.order(), 0);
  std::vector<ElementIndex> visited;
  for (ElementIndex x = 1; x < ring.order() && p.is_reduced; ++x) {
    ElementIndex y = x;
    while (!seen[y]) {
      if (y == ring.zero()) break;
      seen[y] = 1;
      visited.push_back(y);
      y = ring.mul(y, x);
    }
    if (y == ring.zero()) p.is_reduced = false;
    for (ElementIndex v : visited) seen[v] = 0;
    visited.clear();
  }

  p.is_boolean = true;
  for (ElementIndex x = 0; x < ring.order(); ++x) {
    if (ring.mul(x, x) != x) {
      p.is_boolean = false;
      break;
    }
  }
  return p;
}

}  // namespace zdg
