// Copyright 2026 The netbuild Authors
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

#ifndef NETBUILD_DEADLINE_HPP
#define NETBUILD_DEADLINE_HPP

#include <chrono>
#include <optional>

#include "netbuild/error.hpp"

namespace netbuild {

/// Cooperative wall-clock budget. Long loops call check(), which throws
/// TimeoutError once the budget is spent. A default-constructed deadline
/// never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = Clock::now() + budget;
    return d;
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check() const {
    if (expired()) throw TimeoutError("deadline expired");
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace netbuild

#endif  // NETBUILD_DEADLINE_HPP
