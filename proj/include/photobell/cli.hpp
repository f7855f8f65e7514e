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

#include <optional>
#include <ostream>
#include <string_view>

#include "photobell/angles.hpp"

namespace photobell::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kIo = 3 };

/// Radians, or degrees with a "deg:" prefix. Empty on malformed input.
std::optional<double> parse_angle(std::string_view text);
/// Four comma-separated angles (theta1, theta2, theta1', theta2').
std::optional<AngleQuad> parse_quad(std::string_view text);

/// Default worker count: PHOTOBELL_THREADS if set to a positive integer, else 1.
int default_threads();

/// Entry point of the photobell tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace photobell::cli
