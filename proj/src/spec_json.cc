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

#include "fdp_noise/spec_json.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "fdp_noise/cauchy.h"
#include "fdp_noise/logconcave.h"
#include "json.hpp"

namespace fdp_noise {
namespace {

using Json = nlohmann::json;

absl::StatusOr<Json> Parse(std::string_view text) {
  Json parsed = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    return absl::InvalidArgumentError("malformed JSON");
  }
  if (!parsed.is_object()) {
    return absl::InvalidArgumentError("JSON value must be an object");
  }
  return parsed;
}

absl::Status FieldError(const std::string& path, absl::string_view problem) {
  return absl::InvalidArgumentError(
      absl::StrCat("field \"", path, "\": ", problem));
}

absl::StatusOr<double> Number(const Json& obj, const std::string& key,
                              const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(prefix + key, "missing");
  if (!it->is_number()) return FieldError(prefix + key, "must be a number");
  return it->get<double>();
}

absl::StatusOr<int64_t> Integer(const Json& obj, const std::string& key,
                                const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(prefix + key, "missing");
  if (!it->is_number_integer()) {
    return FieldError(prefix + key, "must be an integer");
  }
  return it->get<int64_t>();
}

absl::StatusOr<std::string> String(const Json& obj, const std::string& key,
                                   const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(prefix + key, "missing");
  if (!it->is_string()) return FieldError(prefix + key, "must be a string");
  return it->get<std::string>();
}

absl::StatusOr<std::vector<double>> NumberArray(const Json& obj,
                                                const std::string& key,
                                                const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(prefix + key, "missing");
  if (!it->is_array()) return FieldError(prefix + key, "must be an array");
  std::vector<double> out;
  for (size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_number()) {
      return FieldError(absl::StrCat(prefix, key, "[", i, "]"),
                        "must be a number");
    }
    out.push_back((*it)[i].get<double>());
  }
  return out;
}

absl::StatusOr<TradeoffFamily> BaseFamily(const std::string& base,
                                          const std::string& path) {
  if (base == "laplace") return LaplaceFamily();
  if (base == "gaussian") return GaussianFamily(1.0);
  if (base == "logistic") return LogisticFamily();
  if (base == "uniform") return UniformFamily();
  return FieldError(path, absl::StrCat("unknown base \"", base,
                                       "\"; expected laplace, gaussian, "
                                       "logistic or uniform"));
}

// The status code is preserved but the message gains the field path.
absl::Status WithField(const absl::Status& status, const std::string& path) {
  return absl::Status(status.code(),
                      absl::StrCat("field \"", path, "\": ", status.message()));
}

absl::StatusOr<TradeoffFunction> TradeoffFromJson(const Json& obj,
                                                  const std::string& prefix,
                                                  int depth) {
  if (depth > 32) return FieldError(prefix + "inner", "nested too deeply");
  absl::StatusOr<std::string> kind = String(obj, "kind", prefix);
  if (!kind.ok()) return kind.status();
  if (*kind == "eps_delta") {
    absl::StatusOr<double> eps = Number(obj, "eps", prefix);
    if (!eps.ok()) return eps.status();
    absl::StatusOr<double> delta = Number(obj, "delta", prefix);
    if (!delta.ok()) return delta.status();
    absl::StatusOr<TradeoffFunction> f = MakeEpsDelta(*eps, *delta);
    if (!f.ok()) return WithField(f.status(), prefix + "eps");
    return f;
  }
  if (*kind == "gdp") {
    absl::StatusOr<double> mu = Number(obj, "mu", prefix);
    if (!mu.ok()) return mu.status();
    absl::StatusOr<TradeoffFunction> f = MakeGdp(*mu);
    if (!f.ok()) return WithField(f.status(), prefix + "mu");
    return f;
  }
  if (*kind == "family") {
    absl::StatusOr<std::string> base = String(obj, "base", prefix);
    if (!base.ok()) return base.status();
    absl::StatusOr<double> t = Number(obj, "t", prefix);
    if (!t.ok()) return t.status();
    if (!(*t >= 0.0) || std::isinf(*t)) {
      return FieldError(prefix + "t", "must be finite and nonnegative");
    }
    absl::StatusOr<TradeoffFamily> family = BaseFamily(*base, prefix + "base");
    if (!family.ok()) return family.status();
    return family->member(*t);
  }
  if (*kind == "cauchy") {
    absl::StatusOr<double> m = Number(obj, "m", prefix);
    if (!m.ok()) return m.status();
    absl::StatusOr<CauchyTradeoff> cauchy = MakeCauchyTradeoff(*m);
    if (!cauchy.ok()) return WithField(cauchy.status(), prefix + "m");
    return cauchy->curve;
  }
  if (*kind == "iterate") {
    auto inner = obj.find("inner");
    if (inner == obj.end()) return FieldError(prefix + "inner", "missing");
    if (!inner->is_object()) {
      return FieldError(prefix + "inner", "must be an object");
    }
    absl::StatusOr<TradeoffFunction> f =
        TradeoffFromJson(*inner, prefix + "inner.", depth + 1);
    if (!f.ok()) return f.status();
    absl::StatusOr<int64_t> k = Integer(obj, "k", prefix);
    if (!k.ok()) return k.status();
    if (*k < 1 || *k > 1000000) {
      return FieldError(prefix + "k", "must be an integer in [1, 1000000]");
    }
    return Iterate(*f, static_cast<int>(*k));
  }
  return FieldError(prefix + "kind",
                    absl::StrCat("unknown kind \"", *kind,
                                 "\"; expected eps_delta, gdp, family, "
                                 "cauchy or iterate"));
}

}  // namespace

absl::StatusOr<TradeoffFunction> ParseTradeoffSpec(std::string_view json) {
  absl::StatusOr<Json> obj = Parse(json);
  if (!obj.ok()) return obj.status();
  return TradeoffFromJson(*obj, "", 0);
}

absl::StatusOr<TradeoffFamily> ParseFamilySpec(std::string_view json) {
  absl::StatusOr<Json> obj = Parse(json);
  if (!obj.ok()) return obj.status();
  absl::StatusOr<std::string> kind = String(*obj, "kind", "");
  if (!kind.ok()) return kind.status();
  if (*kind == "gdp") {
    absl::StatusOr<double> mu = Number(*obj, "mu", "");
    if (!mu.ok()) return mu.status();
    if (!(*mu > 0.0) || std::isinf(*mu)) {
      return FieldError("mu", "must be positive and finite for a family");
    }
    return GaussianFamily(*mu);
  }
  if (*kind == "family") {
    absl::StatusOr<std::string> base = String(*obj, "base", "");
    if (!base.ok()) return base.status();
    absl::StatusOr<double> t = Number(*obj, "t", "");
    if (!t.ok()) return t.status();
    if (!(*t > 0.0) || std::isinf(*t)) {
      return FieldError("t", "must be positive and finite for a family");
    }
    absl::StatusOr<TradeoffFamily> family = BaseFamily(*base, "base");
    if (!family.ok()) return family.status();
    return RescaleFamily(*family, *t);
  }
  return FieldError("kind", absl::StrCat("\"", *kind,
                                         "\" does not describe an infinitely "
                                         "divisible family; use gdp or "
                                         "family"));
}

absl::StatusOr<DiscretePmf> ParsePmfJson(std::string_view json) {
  absl::StatusOr<Json> obj = Parse(json);
  if (!obj.ok()) return obj.status();
  absl::StatusOr<int64_t> lo = Integer(*obj, "lo", "");
  if (!lo.ok()) return lo.status();
  absl::StatusOr<std::vector<double>> mass = NumberArray(*obj, "mass", "");
  if (!mass.ok()) return mass.status();
  absl::StatusOr<DiscretePmf> pmf = DiscretePmf::Create(*lo, *std::move(mass));
  if (!pmf.ok()) return WithField(pmf.status(), "mass");
  return pmf;
}

absl::StatusOr<std::vector<double>> ReadSamplesCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open sample file ", path));
  }
  std::vector<double> values;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    absl::string_view cell = absl::StripAsciiWhitespace(
        absl::string_view(line).substr(0, line.find(',')));
    if (cell.empty()) continue;
    double v = 0.0;
    if (!absl::SimpleAtod(cell, &v)) {
      if (values.empty() && line_number == 1) continue;  // header
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", line_number, ": \"", cell, "\" is not a number"));
    }
    values.push_back(v);
  }
  return values;
}

absl::StatusOr<NoiseSpec> ParseNoiseJson(std::string_view json,
                                         const std::string& base_dir) {
  absl::StatusOr<Json> obj = Parse(json);
  if (!obj.ok()) return obj.status();
  int sensitivity = 1;
  if (obj->contains("sensitivity")) {
    absl::StatusOr<int64_t> s = Integer(*obj, "sensitivity", "");
    if (!s.ok()) return s.status();
    if (*s < 1 || *s > 1000000) {
      return FieldError("sensitivity", "must be a positive integer");
    }
    sensitivity = static_cast<int>(*s);
  }
  absl::StatusOr<std::string> kind = String(*obj, "kind", "");
  if (!kind.ok()) return kind.status();
  if (*kind == "cdf-grid") {
    absl::StatusOr<std::vector<double>> x = NumberArray(*obj, "x", "");
    if (!x.ok()) return x.status();
    absl::StatusOr<std::vector<double>> f = NumberArray(*obj, "F", "");
    if (!f.ok()) return f.status();
    absl::StatusOr<RivalNoise> noise =
        RivalNoise::FromCdfGrid(*std::move(x), *std::move(f), "cdf-grid");
    if (!noise.ok()) return noise.status();
    return NoiseSpec{*std::move(noise), sensitivity};
  }
  if (*kind == "pmf") {
    absl::StatusOr<std::vector<double>> support =
        NumberArray(*obj, "support", "");
    if (!support.ok()) return support.status();
    absl::StatusOr<std::vector<double>> mass = NumberArray(*obj, "mass", "");
    if (!mass.ok()) return mass.status();
    if (support->size() != mass->size() || support->empty()) {
      return FieldError("mass", "must be non-empty and as long as \"support\"");
    }
    std::map<int64_t, double> points;
    for (size_t i = 0; i < support->size(); ++i) {
      const double s = (*support)[i];
      if (s != std::floor(s) || std::fabs(s) > 1e9) {
        return FieldError(absl::StrCat("support[", i, "]"),
                          "must be an integer of magnitude <= 1e9");
      }
      points[static_cast<int64_t>(s)] += (*mass)[i];
    }
    const int64_t lo = points.begin()->first;
    std::vector<double> dense(points.rbegin()->first - lo + 1, 0.0);
    for (const auto& [x, m] : points) dense[x - lo] = m;
    absl::StatusOr<DiscretePmf> pmf = DiscretePmf::Create(lo, std::move(dense));
    if (!pmf.ok()) return WithField(pmf.status(), "mass");
    return NoiseSpec{RivalNoise::FromPmf(*std::move(pmf), "pmf"), sensitivity};
  }
  if (*kind == "samples") {
    absl::StatusOr<std::string> path = String(*obj, "path", "");
    if (!path.ok()) return path.status();
    std::filesystem::path resolved(*path);
    if (resolved.is_relative() && !base_dir.empty()) {
      resolved = std::filesystem::path(base_dir) / resolved;
    }
    absl::StatusOr<std::vector<double>> values =
        ReadSamplesCsv(resolved.string());
    if (!values.ok()) return WithField(values.status(), "path");
    absl::StatusOr<RivalNoise> noise =
        RivalNoise::FromSamples(*std::move(values), "samples");
    if (!noise.ok()) return WithField(noise.status(), "path");
    return NoiseSpec{*std::move(noise), sensitivity};
  }
  return FieldError("kind", absl::StrCat("unknown kind \"", *kind,
                                         "\"; expected cdf-grid, pmf or "
                                         "samples"));
}

}  // namespace fdp_noise
