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

#ifndef ZDG_NUMBER_THEORY_HPP
#define ZDG_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace zdg {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// n = p^e with e >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

bool is_composite(std::uint64_t n);

/// Integer power; saturates to UINT64_MAX on overflow.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// Sieve of Eratosthenes; result[i] is true iff i is prime, for i <= limit.
std::vector<bool> prime_sieve(std::uint64_t limit);

}  // namespace zdg

#endif  // ZDG_NUMBER_THEORY_HPP
