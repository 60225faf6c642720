// Copyright 2026 The fdp-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FDP_NOISE_SPEC_JSON_H_
#define FDP_NOISE_SPEC_JSON_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp_noise/audit.h"
#include "fdp_noise/discrete_pmf.h"
#include "fdp_noise/rival_noise.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {

// {"kind":"eps_delta","eps":1,"delta":0} | {"kind":"gdp","mu":1} |
// {"kind":"family","base":"laplace","t":1} | {"kind":"cauchy","m":1} |
// {"kind":"iterate","inner":{...},"k":3}. Errors name the offending field.
absl::StatusOr<TradeoffFunction> ParseTradeoffSpec(std::string_view json);

// Infinitely divisible family whose member(1) is the tradeoff function of the
// spec. Only "gdp" and "family" specs describe one.
absl::StatusOr<TradeoffFamily> ParseFamilySpec(std::string_view json);

// {"lo": -5, "mass": [...]}.
absl::StatusOr<DiscretePmf> ParsePmfJson(std::string_view json);

// {"kind":"cdf-grid","x":[...],"F":[...]} |
// {"kind":"pmf","support":[...],"mass":[...]} |
// {"kind":"samples","path":"file.csv"}, each with an optional integer
// "sensitivity" (default 1). Relative sample paths resolve against
// `base_dir`.
absl::StatusOr<NoiseSpec> ParseNoiseJson(std::string_view json,
                                         const std::string& base_dir = "");

// One value per line from the first comma-separated column; a non-numeric
// first line is treated as a header.
absl::StatusOr<std::vector<double>> ReadSamplesCsv(const std::string& path);

}  // namespace fdp_noise

#endif  // FDP_NOISE_SPEC_JSON_H_
