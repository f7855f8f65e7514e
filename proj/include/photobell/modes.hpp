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

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "photobell/errors.hpp"

namespace photobell {

/// One of the four field modes.
///
///   0 <-> a1: direction k,  polarization x
///   1 <-> a2: direction k,  polarization y
///   2 <-> a3: direction k', polarization x'
///   3 <-> a4: direction k', polarization y'
class ModeIndex {
 public:
  constexpr explicit ModeIndex(int value) : value_(value) {
    if (value < 0 || value > 3) {
      throw PreconditionViolated("mode index must lie in [0, 3], got " +
                                 std::to_string(value));
    }
  }
  constexpr int value() const { return value_; }
  friend constexpr bool operator==(ModeIndex, ModeIndex) = default;
  friend constexpr auto operator<=>(ModeIndex, ModeIndex) = default;

 private:
  int value_;
};

/// A subset of {0, 1, 2, 3}, stored as a bitmask.
class ModeSet {
 public:
  constexpr ModeSet() = default;
  constexpr ModeSet(std::initializer_list<int> modes) {
    for (int m : modes) insert(ModeIndex(m));
  }

  static constexpr ModeSet all() { return ModeSet{0, 1, 2, 3}; }

  constexpr void insert(ModeIndex m) { bits_ |= static_cast<std::uint8_t>(1u << m.value()); }
  constexpr bool contains(ModeIndex m) const { return (bits_ >> m.value()) & 1u; }
  constexpr bool contains(int m) const { return (bits_ >> m) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr ModeSet operator|(ModeSet a, ModeSet b) {
    ModeSet out;
    out.bits_ = a.bits_ | b.bits_;
    return out;
  }
  friend constexpr bool operator==(ModeSet, ModeSet) = default;

  std::vector<ModeIndex> members() const {
    std::vector<ModeIndex> out;
    for (int m = 0; m < 4; ++m) {
      if (contains(m)) out.emplace_back(m);
    }
    return out;
  }

 private:
  std::uint8_t bits_ = 0;
};

/// The two propagation directions; each owns an (x, y) mode pair.
enum class Beam { k, k_prime };

inline ModeIndex x_mode(Beam beam) { return ModeIndex(beam == Beam::k ? 0 : 2); }
inline ModeIndex y_mode(Beam beam) { return ModeIndex(beam == Beam::k ? 1 : 3); }
inline ModeSet beam_modes(Beam beam) {
  return beam == Beam::k ? ModeSet{0, 1} : ModeSet{2, 3};
}

/// Occupation numbers of up to four modes; unused trailing entries are zero.
using Occupation = std::array<int, 4>;

}  // namespace photobell
