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

#include "zdg/report.hpp"

#include <sstream>

namespace zdg {

using nlohmann::json;

json to_json(Length d) {
  if (!d.is_finite()) return "inf";
  return d.value();
}

json to_json(const RingProfile& p) {
  return {{"order", p.order},
          {"characteristic", p.characteristic},
          {"is_local", p.is_local},
          {"is_field", p.is_field},
          {"is_reduced", p.is_reduced},
          {"is_boolean", p.is_boolean},
          {"maximal_ideal_count", p.maximal_ideal_count},
          {"num_zero_divisors_star", p.num_zero_divisors_star},
          {"local_factor_count", p.local_factor_count},
          {"field_factor_count", p.field_factor_count},
          {"unit_count", p.unit_count}};
}

json to_json(const AnalysisReport& r) {
  json j{{"vertex_count", r.vertex_count},
         {"edge_count", r.edge_count},
         {"is_connected", r.is_connected},
         {"diameter", to_json(r.diameter)},
         {"girth", to_json(r.girth)},
         {"is_complete", r.is_complete},
         {"universal_vertices", r.universal_vertices},
         {"every_vertex_in_triangle", r.every_vertex_in_triangle},
         {"square_property_holds", r.square_property_holds},
         {"is_hypotriangulated", r.is_hypotriangulated},
         {"is_chordal", r.is_chordal},
         {"chordless_cycle_witness", nullptr}};
  if (r.chordless_cycle_witness) j["chordless_cycle_witness"] = *r.chordless_cycle_witness;
  return j;
}

json to_json(const TheoremVerdict& v) {
  return {{"theorem_id", v.theorem_id},
          {"applicable", v.applicable},
          {"holds", v.holds},
          {"witness_or_counterexample", v.detail}};
}

namespace {

std::string_view check_name(CertificateCheck c) {
  switch (c) {
    case CertificateCheck::Verified:
      return "verified";
    case CertificateCheck::Failed:
      return "failed";
    case CertificateCheck::BeyondCap:
      return "not constructively verified";
  }
  return "?";
}

json reason_json(const RealizationCertificate& c) {
  if (const auto* pp = std::get_if<PrimePowerReason>(&c.reason)) {
    return {{"kind", "prime_power"}, {"p", pp->prime}, {"exponent", pp->exponent}};
  }
  const auto& tp = std::get<TwoPrimesReason>(c.reason);
  return {{"kind", "two_primes"}, {"p", tp.p}, {"q", tp.q}};
}

std::string reason_text(const RealizationCertificate& c) {
  if (const auto* pp = std::get_if<PrimePowerReason>(&c.reason)) {
    return std::to_string(pp->prime) + "^" + std::to_string(pp->exponent);
  }
  const auto& tp = std::get<TwoPrimesReason>(c.reason);
  return std::to_string(tp.p) + "*" + std::to_string(tp.q);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

json to_json(const RealizationResult& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"k", c.k}, {"reason", reason_json(c)}, {"check", check_name(c.check)}});
  }
  return {{"n", r.n}, {"realizable", r.realizable}, {"certificates", certs}, {"search_bound_used", r.search_bound_used}};
}

json to_json(const SuiteReport& r) {
  json rings = json::array();
  for (const auto& rr : r.rings) {
    json j{{"name", rr.name}, {"spec", rr.spec_text}};
    if (rr.result) {
      j["profile"] = to_json(rr.result->profile);
      j["analysis"] = {{"gamma", to_json(rr.result->gamma)},
                       {"zstar", to_json(rr.result->zstar)},
                       {"tilde", to_json(rr.result->tilde)}};
      json verdicts = json::array();
      for (const auto& v : rr.result->verdicts) verdicts.push_back(to_json(v));
      j["verdicts"] = std::move(verdicts);
    } else {
      j["error"] = rr.error;
    }
    rings.push_back(std::move(j));
  }
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"ring", f.ring}, {"theorem_id", f.theorem_id}, {"detail", f.detail}});
  }
  return {{"rings", rings},
          {"aggregate",
           {{"ring_count", r.rings.size()},
            {"verdict_count", r.verdict_count},
            {"applicable_count", r.applicable_count},
            {"holds_count", r.holds_count},
            {"failure_count", r.failures.size()}}},
          {"failures", failures}};
}

std::string to_text(const RingProfile& p) {
  std::ostringstream out;
  out << "order                  " << p.order << "\n"
      << "characteristic         " << p.characteristic << "\n"
      << "local                  " << yes_no(p.is_local) << "\n"
      << "field                  " << yes_no(p.is_field) << "\n"
      << "reduced                " << yes_no(p.is_reduced) << "\n"
      << "boolean                " << yes_no(p.is_boolean) << "\n"
      << "maximal ideals         " << p.maximal_ideal_count << "\n"
      << "|Z(R)*|                " << p.num_zero_divisors_star << "\n"
      << "units                  " << p.unit_count << "\n";
  return out.str();
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "vertices               " << r.vertex_count << "\n"
      << "edges                  " << r.edge_count << "\n"
      << "connected              " << yes_no(r.is_connected) << "\n"
      << "diameter               " << to_string(r.diameter) << "\n"
      << "girth                  " << to_string(r.girth) << "\n"
      << "complete               " << yes_no(r.is_complete) << "\n"
      << "universal vertices     ";
  for (std::size_t i = 0; i < r.universal_vertices.size(); ++i) out << (i ? " " : "") << r.universal_vertices[i];
  out << "\n"
      << "triangle property      " << yes_no(r.every_vertex_in_triangle) << "\n"
      << "square property        " << yes_no(r.square_property_holds) << "\n"
      << "hypotriangulated       " << yes_no(r.is_hypotriangulated) << "\n"
      << "chordal                " << yes_no(r.is_chordal) << "\n";
  if (r.chordless_cycle_witness) {
    out << "chordless cycle        ";
    for (std::size_t i = 0; i < r.chordless_cycle_witness->size(); ++i) {
      out << (i ? " - " : "") << (*r.chordless_cycle_witness)[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string to_text(const RealizationResult& r) {
  std::ostringstream out;
  out << "K_" << r.n << ": " << (r.realizable ? "realizable" : "not realizable") << "\n";
  for (const auto& c : r.certificates) {
    out << "  k = " << c.k << " (" << reason_text(c) << ", " << check_name(c.check) << ")\n";
  }
  return out.str();
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& rr : r.rings) {
    if (!rr.result) {
      out << rr.name << ": ERROR " << rr.error << "\n";
      continue;
    }
    std::size_t applicable = 0, held = 0;
    for (const auto& v : rr.result->verdicts) {
      applicable += v.applicable ? 1 : 0;
      held += v.holds ? 1 : 0;
    }
    out << rr.name << ": " << held << "/" << applicable << " applicable verdicts hold\n";
  }
  for (const auto& f : r.failures) out << "FAIL " << f.ring << " " << f.theorem_id << " " << f.detail.dump() << "\n";
  out << r.rings.size() << " rings, " << r.applicable_count << " applicable verdicts, " << r.failures.size()
      << " failures\n";
  return out.str();
}

}  // namespace zdg
