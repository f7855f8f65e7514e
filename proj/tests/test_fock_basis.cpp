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

#include <gtest/gtest.h>

#include <set>

#include "photobell/fock_basis.hpp"

namespace photobell {
namespace {

TEST(FockBasis, DimensionCountsTuplesUpToCutoff) {
  // C(N + 4, 4) for four modes
  EXPECT_EQ(FockBasis::four_mode(0)->dim(), 1u);
  EXPECT_EQ(FockBasis::four_mode(2)->dim(), 15u);
  EXPECT_EQ(FockBasis::four_mode(12)->dim(), 1820u);
  EXPECT_EQ(FockBasis::four_mode(16)->dim(), 4845u);
  EXPECT_EQ(sector_dimension(4, 3), 20u);
  EXPECT_EQ(sector_dimension(1, 5), 1u);
}

TEST(FockBasis, OrderIsAscendingTotalThenLexicographic) {
  const auto basis = FockBasis::four_mode(3);
  for (std::size_t i = 1; i < basis->dim(); ++i) {
    const int t0 = basis->total(i - 1);
    const int t1 = basis->total(i);
    ASSERT_LE(t0, t1);
    if (t0 == t1) {
      EXPECT_LT(basis->occupation(i - 1), basis->occupation(i));
    }
  }
  EXPECT_EQ(basis->occupation(0), (Occupation{0, 0, 0, 0}));
  EXPECT_EQ(basis->occupation(1), (Occupation{0, 0, 0, 1}));
  EXPECT_EQ(basis->occupation(4), (Occupation{1, 0, 0, 0}));
  EXPECT_EQ(basis->occupation(5), (Occupation{0, 0, 0, 2}));
}

TEST(FockBasis, IndexOfInvertsOccupation) {
  const auto basis = FockBasis::four_mode(6);
  std::set<Occupation> seen;
  for (std::size_t i = 0; i < basis->dim(); ++i) {
    EXPECT_EQ(basis->index_of(basis->occupation(i)), i);
    seen.insert(basis->occupation(i));
  }
  EXPECT_EQ(seen.size(), basis->dim());
  EXPECT_EQ(basis->index_of({7, 0, 0, 0}), FockBasis::npos);
  EXPECT_EQ(basis->index_of({-1, 0, 0, 0}), FockBasis::npos);
}

TEST(FockBasis, SectorsPartitionTheBasis) {
  const auto basis = FockBasis::four_mode(5);
  std::size_t covered = 0;
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(basis->sector_end(n) - basis->sector_begin(n), sector_dimension(4, n));
    for (std::size_t i = basis->sector_begin(n); i < basis->sector_end(n); ++i) {
      EXPECT_EQ(basis->total(i), n);
    }
    covered += sector_dimension(4, n);
  }
  EXPECT_EQ(covered, basis->dim());
}

TEST(FockBasis, ReducedBasisKeepsLabels) {
  const auto basis = FockBasis::make({ModeIndex(0), ModeIndex(2), ModeIndex(3)}, 4);
  EXPECT_EQ(basis->num_modes(), 3);
  EXPECT_EQ(basis->position_of(ModeIndex(2)), 1);
  EXPECT_EQ(basis->position_of(ModeIndex(1)), -1);
  EXPECT_FALSE(basis->has_mode(ModeIndex(1)));
  EXPECT_EQ(basis->positions_of(ModeSet{0, 3}), (std::vector<int>{0, 2}));
  EXPECT_THROW(basis->positions_of(ModeSet{1}), PreconditionViolated);
  EXPECT_EQ(basis->dim(), 35u);
}

TEST(FockBasis, MakeIsCached) {
  EXPECT_EQ(FockBasis::four_mode(7).get(), FockBasis::four_mode(7).get());
}

TEST(FockBasis, RejectsBadLabels) {
  EXPECT_THROW(FockBasis({ModeIndex(1), ModeIndex(1)}, 2), PreconditionViolated);
  EXPECT_THROW(FockBasis({}, 2), PreconditionViolated);
  EXPECT_THROW(FockBasis({ModeIndex(0)}, -1), PreconditionViolated);
  EXPECT_THROW(ModeIndex(4), PreconditionViolated);
  EXPECT_THROW(ModeIndex(-1), PreconditionViolated);
}

TEST(ModeSet, BitOperations) {
  ModeSet s{0, 2};
  EXPECT_TRUE(s.contains(ModeIndex(2)));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ((s | ModeSet{1}).size(), 3);
  EXPECT_EQ(ModeSet::all().size(), 4);
  EXPECT_TRUE(ModeSet{}.empty());
  EXPECT_EQ(beam_modes(Beam::k_prime), (ModeSet{2, 3}));
}

}  // namespace
}  // namespace photobell
