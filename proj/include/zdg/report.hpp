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

#ifndef ZDG_REPORT_HPP
#define ZDG_REPORT_HPP

#include <string>

#include "json.hpp"

#include "zdg/metrics.hpp"
#include "zdg/ring.hpp"
#include "zdg/theorems.hpp"

// JSON schemas and human-readable text for the report types. Infinite
// lengths serialize as the string "inf".

namespace zdg {

nlohmann::json to_json(Length d);
nlohmann::json to_json(const RingProfile& p);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const TheoremVerdict& v);
nlohmann::json to_json(const RealizationResult& r);
nlohmann::json to_json(const SuiteReport& r);

std::string to_text(const RingProfile& p);
std::string to_text(const AnalysisReport& r);
std::string to_text(const RealizationResult& r);
std::string to_text(const SuiteReport& r);

}  // namespace zdg

#endif  // ZDG_REPORT_HPP
