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

#include "optimizer.hpp"

#include <ceres/ceres.h>

#include <algorithm>
#include <cmath>

namespace subentropy::detail {

namespace {

class Adapter final : public ceres::FirstOrderFunction {
 public:
  Adapter(const GradientFunction& fn, int n) : fn_(fn), n_(n) {}
  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    return fn_(parameters, cost, gradient);
  }
  int NumParameters() const override { return n_; }

 private:
  const GradientFunction& fn_;
  int n_;
};

}  // namespace

MinimizeResult minimize_lbfgs(const GradientFunction& fn, int num_parameters, std::vector<double> x0,
                              int max_iterations, double gradient_tolerance) {
  MinimizeResult result;
  result.x = std::move(x0);
  if (num_parameters == 0) {
    fn(result.x.data(), &result.value, nullptr);
    return result;
  }
  ceres::GradientProblem problem(new Adapter(fn, num_parameters));
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = max_iterations;
  options.function_tolerance = 1e-16;
  options.gradient_tolerance = gradient_tolerance;
  options.parameter_tolerance = 1e-16;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, result.x.data(), &summary);
  result.value = summary.final_cost;
  result.iterations = static_cast<int>(summary.iterations.size());
  return result;
}

GradientFunction numeric_gradient(ValueFunction fn, int num_parameters, double step) {
  return [fn = std::move(fn), num_parameters, step](const double* x, double* value, double* gradient) {
    if (!fn(x, value)) return false;
    if (gradient == nullptr) return true;
    std::vector<double> probe(x, x + num_parameters);
    for (int i = 0; i < num_parameters; ++i) {
      const double h = step * std::max(1.0, std::abs(x[i]));
      double up = 0.0;
      double down = 0.0;
      probe[i] = x[i] + h;
      const bool ok_up = fn(probe.data(), &up);
      probe[i] = x[i] - h;
      const bool ok_down = fn(probe.data(), &down);
      probe[i] = x[i];
      if (!ok_up || !ok_down) return false;
      gradient[i] = (up - down) / (2.0 * h);
    }
    return true;
  };
}

}  // namespace subentropy::detail
