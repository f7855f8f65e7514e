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

#include <cstddef>
#include <memory>
#include <vector>

#include "photobell/modes.hpp"

namespace photobell {

/// Number of occupation tuples of `modes` modes holding exactly `total` photons.
std::size_t sector_dimension(int modes, int total);

/// Position of `occupation` (first `modes` entries) among all tuples with the
/// same total, ordered lexicographically.
std::size_t rank_in_sector(const Occupation& occupation, int modes);

/// Photon-number basis of a set of labelled modes under a global cutoff on
/// the total photon number.
///
/// States are enumerated by ascending total, and lexicographically on
/// (n_1, ..., n_m) within each total. The order is part of the serialized
/// form of every state, so it never changes. A basis carries the physical
/// labels of its modes: after a polarizer or a partial trace the surviving
/// modes keep their original labels.
class FockBasis {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Shared, cached basis for the given labels (in order) and cutoff.
  static std::shared_ptr<const FockBasis> make(std::vector<ModeIndex> labels, int cutoff);
  /// The full four-mode basis.
  static std::shared_ptr<const FockBasis> four_mode(int cutoff);

  int num_modes() const { return static_cast<int>(labels_.size()); }
  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return states_.size(); }

  const Occupation& occupation(std::size_t i) const { return states_[i]; }
  int total(std::size_t i) const;

  /// Index of an occupation tuple, or npos when it exceeds the cutoff.
  std::size_t index_of(const Occupation& occupation) const;

  std::size_t sector_begin(int total) const { return sector_offsets_[total]; }
  std::size_t sector_end(int total) const { return sector_offsets_[total + 1]; }

  const std::vector<ModeIndex>& labels() const { return labels_; }
  /// Position of a physical mode in this basis, or -1 if it is absent.
  int position_of(ModeIndex mode) const;
  bool has_mode(ModeIndex mode) const { return position_of(mode) >= 0; }
  /// Positions that the members of `modes` occupy; throws if one is absent.
  std::vector<int> positions_of(ModeSet modes) const;

  FockBasis(std::vector<ModeIndex> labels, int cutoff);

 private:
  std::vector<ModeIndex> labels_;
  int cutoff_;
  std::vector<Occupation> states_;
  std::vector<std::size_t> sector_offsets_;
};

using FockBasisPtr = std::shared_ptr<const FockBasis>;

}  // namespace photobell
