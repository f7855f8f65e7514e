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

#include "photobell/fock_basis.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

namespace photobell {
namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  }
  return r;
}

// Appends every tuple of `modes` entries summing to `remaining`, lexicographically.
void enumerate_sector(int pos, int modes, int remaining, Occupation& current,
                      std::vector<Occupation>& out) {
  if (pos == modes - 1) {
    current[pos] = remaining;
    out.push_back(current);
    current[pos] = 0;
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    current[pos] = n;
    enumerate_sector(pos + 1, modes, remaining - n, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::size_t sector_dimension(int modes, int total) {
  if (total < 0) return 0;
  if (modes == 0) return total == 0 ? 1 : 0;
  return binomial(total + modes - 1, modes - 1);
}

std::size_t rank_in_sector(const Occupation& occupation, int modes) {
  int remaining = 0;
  for (int i = 0; i < modes; ++i) remaining += occupation[i];
  std::size_t rank = 0;
  for (int pos = 0; pos + 1 < modes; ++pos) {
    const int tail_modes = modes - pos - 1;
    for (int a = 0; a < occupation[pos]; ++a) {
      rank += sector_dimension(tail_modes, remaining - a);
    }
    remaining -= occupation[pos];
  }
  return rank;
}

FockBasis::FockBasis(std::vector<ModeIndex> labels, int cutoff)
    : labels_(std::move(labels)), cutoff_(cutoff) {
  if (cutoff < 0) throw PreconditionViolated("cutoff must be nonnegative");
  if (labels_.empty() || labels_.size() > 4) {
    throw PreconditionViolated("a Fock basis needs between one and four modes");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) throw PreconditionViolated("duplicate mode label");
    }
  }
  const int modes = num_modes();
  sector_offsets_.reserve(cutoff + 2);
  sector_offsets_.push_back(0);
  for (int n = 0; n <= cutoff; ++n) {
    Occupation current{};
    enumerate_sector(0, modes, n, current, states_);
    sector_offsets_.push_back(states_.size());
  }
}

int FockBasis::total(std::size_t i) const {
  const auto& occ = states_[i];
  return occ[0] + occ[1] + occ[2] + occ[3];
}

std::size_t FockBasis::index_of(const Occupation& occupation) const {
  int total = 0;
  for (int i = 0; i < num_modes(); ++i) {
    if (occupation[i] < 0) return npos;
    total += occupation[i];
  }
  if (total > cutoff_) return npos;
  return sector_offsets_[total] + rank_in_sector(occupation, num_modes());
}

int FockBasis::position_of(ModeIndex mode) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == mode) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> FockBasis::positions_of(ModeSet modes) const {
  std::vector<int> out;
  for (ModeIndex m : modes.members()) {
    const int p = position_of(m);
    if (p < 0) {
      throw PreconditionViolated("mode " + std::to_string(m.value()) +
                                 " is not part of this state");
    }
    out.push_back(p);
  }
  return out;
}

std::shared_ptr<const FockBasis> FockBasis::make(std::vector<ModeIndex> labels, int cutoff) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const FockBasis>> cache;
  std::vector<int> key_labels;
  for (ModeIndex m : labels) key_labels.push_back(m.value());
  auto key = std::make_pair(std::move(key_labels), cutoff);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const FockBasis>(std::move(labels), cutoff);
  cache.emplace(std::move(key), basis);
  return basis;
}

std::shared_ptr<const FockBasis> FockBasis::four_mode(int cutoff) {
  return make({ModeIndex(0), ModeIndex(1), ModeIndex(2), ModeIndex(3)}, cutoff);
}

}  // namespace photobell
