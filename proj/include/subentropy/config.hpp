// Copyright 2026 The subentropy Authors
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

#include <cstdint>

namespace subentropy {

/// Budget for the multi-start solvers.
struct SolverBudget {
  int starts = 4;
  int max_iterations = 4000;
  double stationarity_tolerance = 1e-7;
  std::uint64_t seed = 0;
};

namespace defaults {

inline constexpr int kStarts = 4;
inline constexpr int kMaxIterations = 4000;
inline constexpr double kStationarityTolerance = 1e-7;
inline constexpr double kBarrierRelativeGap = 1e-10;
inline constexpr int kMaxDivergenceStarts = 16;
inline constexpr int kGridPoints = 51;
inline constexpr double kGridRelaxationTimes = 5.0;
inline constexpr double kEpsilon = 0.05;
inline constexpr double kViolationTolerance = 1e-6;
inline constexpr int kDiscreteSteps = 30;

}  // namespace defaults

}  // namespace subentropy
