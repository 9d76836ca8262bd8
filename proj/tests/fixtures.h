// Copyright 2026 The mstratio Authors.
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

// Shared instances and assertion helpers for the unit tests.

#ifndef MSTRATIO_TESTS_FIXTURES_H_
#define MSTRATIO_TESTS_FIXTURES_H_

#include <cmath>
#include <initializer_list>
#include <vector>

#include <gtest/gtest.h>

#include "mstratio/core.h"

namespace fixture {

inline mstratio::PointSet Points(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> r;
  for (auto row : rows) r.emplace_back(row);
  return mstratio::PointSet::FromRows(r);
}

inline mstratio::PointSet Tri3() {
  return Points({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

// Unit square; vertices 0 and 3 are a diagonal pair.
inline mstratio::PointSet Sq4() {
  return Points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

// n collinear points spaced 1 apart.
inline mstratio::PointSet Line(int n) {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < n; ++i) rows.push_back({static_cast<double>(i), 0.0});
  return mstratio::PointSet::FromRows(rows);
}

inline mstratio::WeightedCompleteGraph FromMatrix(
    const std::vector<std::vector<double>>& w,
    mstratio::MetricState state = mstratio::MetricState::kUnknown) {
  std::vector<double> upper;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) upper.push_back(w[i][j]);
  return mstratio::WeightedCompleteGraph(static_cast<int>(w.size()), upper,
                                         state);
}

template <typename F>
void ExpectErrorCode(F&& f, mstratio::ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "expected error " << mstratio::ErrorCodeName(code);
  } catch (const mstratio::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace fixture

#endif  // MSTRATIO_TESTS_FIXTURES_H_
