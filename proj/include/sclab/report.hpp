// Copyright 2026 The sclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "sclab/bounds.hpp"
#include "sclab/constructions.hpp"
#include "sclab/search.hpp"

namespace sclab {

// JSON Lines serialisation. Every object carries "schema" and "type"; keys
// are emitted in sorted order and nothing depends on the clock, so equal
// inputs give byte-identical lines.
inline constexpr int kReportSchema = 1;

std::string check_json(const BoundCheck& check);
std::string profile_json(const Graph& g, const CycleProfile& profile);
std::string record_json(const GraphRecord& record);
std::string summary_json(const SweepReport& report);
std::string hunt_json(const HuntConfig& config, const HuntResult& result);
std::string construction_json(const Construction& c);

// Human-readable forms. A check reads "T2.2: holds, tight, 9 ≤ 9"; bounds
// that are not integers print as a fraction.
std::string check_text(const BoundCheck& check);
std::string profile_text(const Graph& g, const CycleProfile& profile);
// Applicable checks only, one per line, then a one-line tally.
std::string record_text(const GraphRecord& record);

}  // namespace sclab
