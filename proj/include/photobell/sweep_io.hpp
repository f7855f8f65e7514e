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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "photobell/scan.hpp"

namespace photobell {

/// Column order of the CSV output.
inline constexpr const char* kSweepCsvHeader =
    "family,kappa,u,v,theta1,theta2,theta1p,theta2p,p_tt,p_t_,p__t,p__,f,lower_bound,verdict";

/// Seventeen significant digits (%.17g), so values round-trip exactly.
std::string format_double(double x);

/// "obeys", "violates_upper", "violates_lower", or "error:<kind>".
std::string verdict_token(const SweepRow& row);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// A JSON array of objects keyed by the CSV column names; NaN becomes null.
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace photobell
