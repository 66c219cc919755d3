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

#include "qsg/threads.hpp"

#include <cstdlib>
#include <thread>

namespace qsg {

int resolve_thread_count(int requested) {
  int count = requested > 0
                  ? requested
                  : static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  if (const char* env = std::getenv("QSG_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < count) count = cap;
  }
  return count;
}

}  // namespace qsg
