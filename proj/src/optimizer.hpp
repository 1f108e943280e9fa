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

#include <functional>
#include <vector>

namespace subentropy::detail {

/// Returns false when the point is outside the domain.
using GradientFunction = std::function<bool(const double* x, double* value, double* gradient)>;
using ValueFunction = std::function<bool(const double* x, double* value)>;

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// L-BFGS with Wolfe line search.
MinimizeResult minimize_lbfgs(const GradientFunction& fn, int num_parameters, std::vector<double> x0,
                              int max_iterations, double gradient_tolerance = 1e-13);

/// Central finite differences with relative step `step`.
GradientFunction numeric_gradient(ValueFunction fn, int num_parameters, double step = 1e-6);

}  // namespace subentropy::detail
