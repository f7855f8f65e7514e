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

#include <stdexcept>
#include <string>

namespace photobell {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested number state does not fit under the global photon cutoff.
class OccupationExceedsCutoff : public Error {
 public:
  using Error::Error;
};

/// Truncating a state to the cutoff lost more probability than allowed.
class TruncationTooSevere : public Error {
 public:
  TruncationTooSevere(const std::string& what, double deficit)
      : Error(what), deficit_(deficit) {}
  double deficit() const { return deficit_; }

 private:
  double deficit_;
};

/// A precision matrix violates positivity or the uncertainty relation.
class InvalidGaussian : public Error {
 public:
  using Error::Error;
};

/// A determinant argument failed its positive-definite factorization.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A computed probability left [0, 1] by more than the clamping slack.
class ProbabilityOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace photobell
