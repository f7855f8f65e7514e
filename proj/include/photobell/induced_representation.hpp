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

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "photobell/fock_basis.hpp"

namespace photobell {

/// Per-sector matrices of the Fock unitary induced by a k x k mode matrix W.
///
/// Entry `sectors[n]` is the d_n x d_n block acting on the n-photon sector of
/// k modes (basis order of FockBasis). Column |m> is
/// prod_j (sum_i W_ij a_i^dagger)^{m_j} / sqrt(m_j!) |0>, built one photon at a
/// time from the (n-1)-photon block.
using InducedSectors = std::vector<Eigen::MatrixXcd>;

/// Returns sectors 0..max_total for W, from a process-wide cache that is safe
/// for concurrent readers.
std::shared_ptr<const InducedSectors> induced_sectors(const Eigen::MatrixXcd& w, int max_total);

/// Drops every cached induced representation.
void clear_induced_cache();

/// Left-multiplies `rows` (one row per basis state of `basis`) by the Fock
/// unitary of W acting on the modes at `positions` (W is indexed in the order
/// of `positions`). The operator is block diagonal in the photon number of
/// those modes, so the result is exact within the cutoff.
void apply_mode_unitary(const FockBasis& basis, std::span<const int> positions,
                        const Eigen::MatrixXcd& w, Eigen::MatrixXcd& rows);

}  // namespace photobell
