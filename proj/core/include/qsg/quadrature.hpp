// Copyright 2026 The qsg authors
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

namespace qsg {

struct QuadratureResult {
  double value = 0.0;
  bool converged = false;
};

/// Adaptive Simpson integration with Richardson error control. Failure to
/// meet the tolerance within the depth limit is reported, never silent.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double tolerance,
                                  int max_depth = 48);

}  // namespace qsg
