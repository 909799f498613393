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

#include <thread>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring.hpp"

using zdg::parse_ring_spec;
using zdg::Poly;
using zdg::Ring;
using zdg::RingSpec;

namespace {

std::vector<std::string> all_labels(const Ring& r) {
  std::vector<std::string> out;
  for (zdg::ElementIndex i = 0; i < r.order(); ++i) out.push_back(r.label(i));
  return out;
}

std::vector<std::string> star_labels(const Ring& r) {
  std::vector<std::string> out;
  for (auto i : r.zero_divisors_star()) out.push_back(r.label(i));
  return out;
}

}  // namespace

TEST_CASE("parse_ring_spec accepts the documented forms") {
  CHECK(parse_ring_spec("Z6") == RingSpec::zn(6));
  CHECK(parse_ring_spec("Z2 x Z4") == RingSpec::product({RingSpec::zn(2), RingSpec::zn(4)}));
  CHECK(parse_ring_spec("GF(4)") == RingSpec::quotient(2, Poly({1, 1, 1})));
  CHECK(parse_ring_spec("Z2[x]/(x^2)") == RingSpec::quotient(2, Poly({0, 0, 1})));
  CHECK(parse_ring_spec("  Z2 [ x ] / ( x ^ 2 + x ) ") == RingSpec::quotient(2, Poly({0, 1, 1})));
  CHECK(parse_ring_spec("Z4 x GF(4)").factors().size() == 2);
  CHECK(parse_ring_spec("Z2 x Z2 x Z3").factors().size() == 3);
  CHECK(parse_ring_spec("Z2xZ4") == parse_ring_spec("Z2 x Z4"));
  CHECK(parse_ring_spec("Z3[x]/(x^2-1)") == RingSpec::quotient(3, Poly({2, 0, 1})));
  CHECK(parse_ring_spec("Z5[x]/(x^2+3*x)") == RingSpec::quotient(5, Poly({0, 3, 1})));
  CHECK(parse_ring_spec("GF(7)") == RingSpec::quotient(7, Poly({0, 1})));
}

TEST_CASE("parse_ring_spec rejects bad input") {
  CHECK_THROWS_AS(parse_ring_spec(""), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z6 +"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z1"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z4[x]/(x^2)"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("GF(6)"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z3[x]/(2x^2+1)"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z2[x]/(1)"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z5[y]/(y^2)"), zdg::ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z5000"), zdg::CapExceeded);
  CHECK_NOTHROW(parse_ring_spec("Z64 x Z64"));
  CHECK_THROWS_AS(parse_ring_spec("Z64 x Z128"), zdg::CapExceeded);
  CHECK_NOTHROW(parse_ring_spec("Z64 x Z128", 8192));
  try {
    parse_ring_spec("Z2 x Q4");
    FAIL("expected a parse error");
  } catch (const zdg::ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("to_string round-trips through the parser") {
  for (const auto& spec : corpus::specs_up_to(256)) {
    CHECK(parse_ring_spec(zdg::to_string(spec)) == spec);
  }
  CHECK(zdg::to_string(parse_ring_spec("Z4 x GF(4)")) == "Z4 x Z2[x]/(x^2+x+1)");
}

TEST_CASE("element enumeration order") {
  CHECK(all_labels(Ring(RingSpec::zn(6))) == std::vector<std::string>{"0", "1", "2", "3", "4", "5"});
  const Ring z2z4(parse_ring_spec("Z2 x Z4"));
  CHECK(z2z4.order() == 8);
  CHECK(z2z4.label(0) == "(0,0)");
  CHECK(z2z4.label(1) == "(0,1)");
  CHECK(z2z4.label(4) == "(1,0)");
  CHECK(all_labels(Ring(parse_ring_spec("Z2[x]/(x^2)"))) == std::vector<std::string>{"0", "1", "x", "x+1"});

  const auto elems = zdg::elements(z2z4);
  CHECK(elems.size() == 8);
  CHECK(elems.front().payload == std::vector<std::uint64_t>{0, 0});
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  for (zdg::ElementIndex i = 0; i < z2z4.order(); ++i) CHECK(z2z4.index_of(z2z4.element(i)) == i);
  CHECK_THROWS_AS(z2z4.index_of(zdg::RingElement{{0, 4}}), std::invalid_argument);
}

TEST_CASE("element arithmetic examples") {
  const Ring z6(RingSpec::zn(6));
  CHECK(zdg::mul(z6, {{2}}, {{3}}) == zdg::RingElement{{0}});
  const Ring z2z4(parse_ring_spec("Z2 x Z4"));
  CHECK(zdg::add(z2z4, {{0, 1}}, {{0, 3}}) == zdg::RingElement{{0, 0}});
  CHECK(zdg::neg(z2z4, {{1, 1}}) == zdg::RingElement{{1, 3}});
  const Ring dual(parse_ring_spec("Z2[x]/(x^2)"));
  CHECK(zdg::mul(dual, {{0, 1}}, {{0, 1}}) == zdg::RingElement{{0, 0}});
  const Ring gf4(parse_ring_spec("GF(4)"));
  // x * x = x + 1 in GF(4).
  CHECK(zdg::mul(gf4, {{0, 1}}, {{0, 1}}) == zdg::RingElement{{1, 1}});
}

TEST_CASE("ring axioms hold exhaustively for every corpus ring of order <= 64") {
  for (const auto& spec : corpus::specs_up_to(64)) {
    const Ring r(spec);
    const auto n = static_cast<zdg::ElementIndex>(r.order());
    bool ok = true;
    for (zdg::ElementIndex a = 0; a < n && ok; ++a) {
      ok = r.add(a, 0) == a && r.mul(a, r.one()) == a && r.add(a, r.neg(a)) == 0;
      for (zdg::ElementIndex b = 0; b < n && ok; ++b) {
        ok = r.add(a, b) == r.add(b, a) && r.mul(a, b) == r.mul(b, a);
        for (zdg::ElementIndex c = 0; c < n && ok; ++c) {
          ok = r.add(r.add(a, b), c) == r.add(a, r.add(b, c)) && r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)) &&
               r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c));
        }
      }
    }
    CHECK_MESSAGE(ok, zdg::to_string(spec));
  }
}

TEST_CASE("zero-divisor membership") {
  const Ring z6(RingSpec::zn(6));
  CHECK(z6.is_zero_divisor(2));
  CHECK_FALSE(z6.is_zero_divisor(5));
  CHECK(z6.is_zero_divisor(0));
  CHECK(star_labels(z6) == std::vector<std::string>{"2", "3", "4"});
  CHECK(star_labels(Ring(RingSpec::zn(4))) == std::vector<std::string>{"2"});
  CHECK(zdg::zero_divisors_star(Ring(RingSpec::zn(4))) == std::vector<zdg::RingElement>{{{2}}});

  const Ring z390(RingSpec::zn(390));
  CHECK(z390.zero_divisors_star().size() == oracle::zn_zero_divisor_star_count(390));
  CHECK(z390.zero_divisors_star().size() == 293);

  for (const Ring& r : {Ring(RingSpec::zn(7)), Ring(parse_ring_spec("GF(9)"))}) {
    CHECK(r.zero_divisors_star().empty());
    CHECK(r.is_zero_divisor(0));
  }
}

TEST_CASE("memoized zero-divisor set matches a fresh scan; unit/zero-divisor dichotomy") {
  for (const auto& spec : corpus::specs_up_to(128)) {
    const Ring r(spec);
    const auto brute = oracle::zero_divisor_flags(r);
    std::size_t units = 0;
    bool same = true;
    for (zdg::ElementIndex x = 0; x < r.order(); ++x) {
      same = same && brute[x] == r.is_zero_divisor(x);
      bool invertible = false;
      for (zdg::ElementIndex y = 0; y < r.order() && !invertible; ++y) invertible = r.mul(x, y) == r.one();
      units += invertible ? 1 : 0;
      same = same && invertible != r.is_zero_divisor(x);
    }
    CHECK_MESSAGE(same, zdg::to_string(spec));
    CHECK(r.zero_divisors_star().size() == r.order() - units - 1);
  }
}

TEST_CASE("zero-divisor cache is safe under concurrent first use") {
  const Ring r(RingSpec::zn(2310));
  std::vector<std::size_t> sizes(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      pool.emplace_back([&, t] { sizes[t] = r.zero_divisors_star().size(); });
    }
  }
  for (auto s : sizes) CHECK(s == oracle::zn_zero_divisor_star_count(2310));
}

TEST_CASE("normalize examples") {
  CHECK(zdg::normalized_spec(RingSpec::zn(6)) == parse_ring_spec("Z2 x Z3"));
  CHECK(zdg::normalized_spec(RingSpec::zn(12)) == parse_ring_spec("Z4 x Z3"));
  CHECK(zdg::normalized_spec(RingSpec::zn(9)) == RingSpec::zn(9));
  CHECK(zdg::normalized_spec(parse_ring_spec("Z2[x]/(x^2+x)")) == parse_ring_spec("Z2 x Z2"));
  CHECK(zdg::normalized_spec(parse_ring_spec("Z2[x]/(x^2)")) == parse_ring_spec("Z2[x]/(x^2)"));
  CHECK(zdg::normalized_spec(parse_ring_spec("GF(4)")) == parse_ring_spec("GF(4)"));
  // x^3 + x = x (x + 1)^2 over Z_2.
  const auto split = zdg::normalized_spec(parse_ring_spec("Z2[x]/(x^3+x)")).factors();
  REQUIRE(split.size() == 2);
  CHECK(std::ranges::count(split, zdg::RingFactor{zdg::Zn{2}}) == 1);
  CHECK(std::ranges::count(split, zdg::RingFactor{zdg::QuotientPoly{2, Poly({1, 0, 1})}}) == 1);
  CHECK(zdg::normalized_spec(parse_ring_spec("Z6 x GF(4)")) == parse_ring_spec("Z2 x Z3 x GF(4)"));
}

TEST_CASE("normalization map is a ring isomorphism") {
  for (const auto& spec : corpus::specs_up_to(64)) {
    const auto norm = zdg::normalize(spec);
    const Ring src(spec), dst(norm.normalized);
    REQUIRE(src.order() == dst.order());
    const auto& phi = norm.forward;
    std::vector<bool> hit(dst.order(), false);
    bool ok = phi[src.zero()] == dst.zero() && phi[src.one()] == dst.one();
    for (zdg::ElementIndex a = 0; a < src.order(); ++a) {
      ok = ok && !hit[phi[a]];
      hit[phi[a]] = true;
      for (zdg::ElementIndex b = 0; b < src.order() && ok; ++b) {
        ok = phi[src.add(a, b)] == dst.add(phi[a], phi[b]) && phi[src.mul(a, b)] == dst.mul(phi[a], phi[b]);
      }
    }
    CHECK_MESSAGE(ok, zdg::to_string(spec));
  }
}

TEST_CASE("ring_profile examples") {
  const auto z12 = zdg::ring_profile(Ring(RingSpec::zn(12)));
  CHECK(z12.characteristic == 12);
  CHECK_FALSE(z12.is_local);
  CHECK(z12.maximal_ideal_count == 2);
  CHECK_FALSE(z12.is_reduced);
  CHECK(z12.num_zero_divisors_star == 7);

  // Nilpotents of Z12 by brute force: only 0 and 6.
  const Ring r12(RingSpec::zn(12));
  std::vector<zdg::ElementIndex> nilpotent;
  for (zdg::ElementIndex x = 1; x < 12; ++x) {
    zdg::ElementIndex y = x;
    for (int k = 0; k < 12; ++k) y = r12.mul(y, x);
    if (y == 0) nilpotent.push_back(x);
  }
  CHECK(nilpotent == std::vector<zdg::ElementIndex>{6});

  const auto boolean3 = zdg::ring_profile(Ring(parse_ring_spec("Z2 x Z2 x Z2")));
  CHECK(boolean3.is_boolean);
  CHECK(boolean3.maximal_ideal_count == 3);

  const auto dual = zdg::ring_profile(Ring(parse_ring_spec("Z2[x]/(x^2)")));
  CHECK(dual.is_local);
  CHECK(dual.characteristic == 2);
  CHECK_FALSE(dual.is_reduced);

  const auto gf9 = zdg::ring_profile(Ring(parse_ring_spec("GF(9)")));
  CHECK(gf9.is_field);
  CHECK(gf9.characteristic == 3);
}

TEST_CASE("ring_profile invariants over the corpus") {
  for (const auto& spec : corpus::specs_up_to(256)) {
    const Ring r(spec);
    const auto p = zdg::ring_profile(r);
    INFO(zdg::to_string(spec));
    CHECK(p.order % p.characteristic == 0);
    if (p.is_field) CHECK(p.is_local);
    if (p.is_boolean) CHECK((p.is_reduced && p.characteristic == 2));
    CHECK(p.maximal_ideal_count == p.local_factor_count);
    CHECK(p.num_zero_divisors_star == p.order - p.unit_count - 1);
    CHECK(p.is_local == zdg::zero_divisors_form_ideal(r));
  }
}
