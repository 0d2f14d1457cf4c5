// Copyright 2026 The eonplan Authors
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


#ifndef EONPLAN_TESTS_SUPPORT_RIDGE_HPP_
#define EONPLAN_TESTS_SUPPORT_RIDGE_HPP_

#include <cstddef>

#include "eonplan/predictor.hpp"
#include "eonplan/trace.hpp"
#include "eonplan/windowing.hpp"

namespace eonplan::testing {

struct RidgeOptions {
  std::size_t patterns = 800;
  double train_fraction = 0.8;
  double lambda = 1e-2;
};

// Linear multi-output forecaster trained per source on the normalized
// training windows. Emits predictions for every window, train and test.
PredictionTable FitRidgePredictions(const TraceSet& traces,
                                    const WindowShape& shape,
                                    const RidgeOptions& options = {});

}  // namespace eonplan::testing

#endif  // EONPLAN_TESTS_SUPPORT_RIDGE_HPP_
