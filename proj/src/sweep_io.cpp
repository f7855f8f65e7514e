// Copyright 2026 The Photobell Authors
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

#include "photobell/sweep_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace photobell {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string verdict_token(const SweepRow& row) {
  if (row.error) return "error:" + *row.error;
  return std::string(to_string(row.verdict));
}

namespace {

std::vector<double> numeric_fields(const SweepRow& row) {
  return {row.kappa,       row.u,          row.v,          row.quad.theta1,
          row.quad.theta2, row.quad.theta1p, row.quad.theta2p, row.rates.p_tt,
          row.rates.p_t_,  row.rates.p__t, row.rates.p__,  row.f,
          row.lower_bound};
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << to_string(row.family);
    for (double x : numeric_fields(row)) out << ',' << format_double(x);
    out << ',' << verdict_token(row) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  static const char* const kNames[] = {"kappa",   "u",    "v",    "theta1",     "theta2",
                                       "theta1p", "theta2p", "p_tt", "p_t_",    "p__t",
                                       "p__",     "f",    "lower_bound"};
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["family"] = std::string(to_string(row.family));
    const auto values = numeric_fields(row);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (std::isfinite(values[i])) {
        obj[kNames[i]] = values[i];
      } else {
        obj[kNames[i]] = nullptr;
      }
    }
    obj["verdict"] = verdict_token(row);
    array.push_back(std::move(obj));
  }
  out << array.dump(2) << '\n';
}

}  // namespace photobell
