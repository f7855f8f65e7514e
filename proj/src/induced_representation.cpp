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

#include "photobell/induced_representation.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace photobell {
namespace {

constexpr std::size_t kMaxCacheEntries = 1024;

std::string cache_key(const Eigen::MatrixXcd& w) {
  std::string key(sizeof(Eigen::Index) + sizeof(std::complex<double>) * w.size(), '\0');
  const Eigen::Index k = w.rows();
  std::memcpy(key.data(), &k, sizeof(k));
  std::memcpy(key.data() + sizeof(k), w.data(), sizeof(std::complex<double>) * w.size());
  return key;
}

class InducedCache {
 public:
  std::shared_ptr<const InducedSectors> get(const Eigen::MatrixXcd& w, int max_total) {
    const std::string key = cache_key(w);
    std::shared_ptr<const InducedSectors> cached;
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) cached = it->second;
    }
    if (cached && static_cast<int>(cached->size()) > max_total) return cached;

    auto built = std::make_shared<InducedSectors>(cached ? *cached : InducedSectors{});
    extend(w, max_total, *built);
    std::unique_lock lock(mutex_);
    if (entries_.size() >= kMaxCacheEntries) entries_.clear();
    auto& slot = entries_[key];
    if (!slot || slot->size() < built->size()) slot = built;
    return slot;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

 private:
  static void extend(const Eigen::MatrixXcd& w, int max_total, InducedSectors& sectors) {
    const int k = static_cast<int>(w.rows());
    std::vector<ModeIndex> labels;
    for (int i = 0; i < k; ++i) labels.emplace_back(i);
    const auto basis = FockBasis::make(labels, max_total);

    if (sectors.empty()) sectors.push_back(Eigen::MatrixXcd::Identity(1, 1));
    for (int n = static_cast<int>(sectors.size()); n <= max_total; ++n) {
      const std::size_t prev_begin = basis->sector_begin(n - 1);
      const std::size_t prev_dim = basis->sector_end(n - 1) - prev_begin;
      const std::size_t begin = basis->sector_begin(n);
      const std::size_t dim = basis->sector_end(n) - begin;

      // raise[s * k + l] = (index in sector n of s + e_l, sqrt(s_l + 1))
      std::vector<std::pair<std::size_t, double>> raise(prev_dim * k);
      for (std::size_t s = 0; s < prev_dim; ++s) {
        const Occupation& occ = basis->occupation(prev_begin + s);
        for (int l = 0; l < k; ++l) {
          Occupation up = occ;
          ++up[l];
          raise[s * k + l] = {rank_in_sector(up, k), std::sqrt(static_cast<double>(occ[l] + 1))};
        }
      }

      const Eigen::MatrixXcd& previous = sectors[n - 1];
      Eigen::MatrixXcd current = Eigen::MatrixXcd::Zero(dim, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        Occupation occ = basis->occupation(begin + c);
        int j = k - 1;
        while (occ[j] == 0) --j;
        const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(occ[j]));
        --occ[j];
        const std::size_t p = rank_in_sector(occ, k);
        for (std::size_t s = 0; s < prev_dim; ++s) {
          const std::complex<double> amp = previous(s, p);
          if (amp == 0.0) continue;
          for (int l = 0; l < k; ++l) {
            const std::complex<double> coeff = w(l, j);
            if (coeff == 0.0) continue;
            const auto& [row, factor] = raise[s * k + l];
            current(row, c) += amp * coeff * (factor * inv_sqrt);
          }
        }
      }
      sectors.push_back(std::move(current));
    }
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const InducedSectors>> entries_;
};

InducedCache& cache() {
  static InducedCache instance;
  return instance;
}

}  // namespace

std::shared_ptr<const InducedSectors> induced_sectors(const Eigen::MatrixXcd& w, int max_total) {
  if (w.rows() != w.cols() || w.rows() < 1 || w.rows() > 4) {
    throw PreconditionViolated("mode matrix must be square with 1..4 modes");
  }
  return cache().get(w, max_total);
}

void clear_induced_cache() { cache().clear(); }

void apply_mode_unitary(const FockBasis& basis, std::span<const int> positions,
                        const Eigen::MatrixXcd& w, Eigen::MatrixXcd& rows) {
  const int k = static_cast<int>(positions.size());
  if (k == 0) return;
  if (w.rows() != k || w.cols() != k) {
    throw PreconditionViolated("mode matrix size does not match the number of positions");
  }
  if (rows.rows() != static_cast<Eigen::Index>(basis.dim())) {
    throw PreconditionViolated("row count does not match the basis dimension");
  }
  const auto sectors = induced_sectors(w, basis.cutoff());
  const int modes = basis.num_modes();

  bool contiguous = (k == modes);
  for (int i = 0; contiguous && i < k; ++i) contiguous = positions[i] == i;

  if (contiguous) {
    for (int n = 1; n <= basis.cutoff(); ++n) {
      const auto begin = static_cast<Eigen::Index>(basis.sector_begin(n));
      const auto dim = static_cast<Eigen::Index>(basis.sector_end(n)) - begin;
      Eigen::MatrixXcd block = (*sectors)[n] * rows.middleRows(begin, dim);
      rows.middleRows(begin, dim) = block;
    }
    return;
  }

  std::vector<bool> in_subset(modes, false);
  for (int p : positions) in_subset[p] = true;

  // Group rows sharing the spectator occupations and the subset total.
  const std::size_t radix = static_cast<std::size_t>(basis.cutoff()) + 1;
  std::unordered_map<std::size_t, std::size_t> group_of;
  std::vector<int> group_total;
  std::vector<std::vector<Eigen::Index>> group_rows;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Occupation& occ = basis.occupation(i);
    Occupation sub{};
    int subtotal = 0;
    for (int a = 0; a < k; ++a) {
      sub[a] = occ[positions[a]];
      subtotal += sub[a];
    }
    if (subtotal == 0) continue;
    std::size_t key = 0;
    for (int p = 0; p < modes; ++p) {
      if (!in_subset[p]) key = key * radix + static_cast<std::size_t>(occ[p]);
    }
    key = key * radix + static_cast<std::size_t>(subtotal);
    auto [it, inserted] = group_of.try_emplace(key, group_rows.size());
    if (inserted) {
      group_total.push_back(subtotal);
      group_rows.emplace_back(sector_dimension(k, subtotal), Eigen::Index{-1});
    }
    group_rows[it->second][rank_in_sector(sub, k)] = static_cast<Eigen::Index>(i);
  }

  const Eigen::Index cols = rows.cols();
  Eigen::MatrixXcd gathered;
  for (std::size_t g = 0; g < group_rows.size(); ++g) {
    const auto& idx = group_rows[g];
    const auto d = static_cast<Eigen::Index>(idx.size());
    gathered.resize(d, cols);
    for (Eigen::Index r = 0; r < d; ++r) gathered.row(r) = rows.row(idx[r]);
    Eigen::MatrixXcd out = (*sectors)[group_total[g]] * gathered;
    for (Eigen::Index r = 0; r < d; ++r) rows.row(idx[r]) = out.row(r);
  }
}

}  // namespace photobell
