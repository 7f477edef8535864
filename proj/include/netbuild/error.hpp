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

#ifndef NETBUILD_ERROR_HPP
#define NETBUILD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace netbuild {

/// Malformed input: bad ids, unparsable files, invalid parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but violates an operation's precondition
/// (disconnected graph, empty broker set, delta below 2, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cooperative deadline expired before the computation finished.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netbuild

#endif  // NETBUILD_ERROR_HPP
