// Copyright 2026 The Littlewood Lab Authors.
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

#ifndef LITTLEWOOD_ERROR_HPP_
#define LITTLEWOOD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lw {

// Raised on precondition violations (bad sizes, radii, ranges).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation needs a fully converged root set and did not get one.
class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lw

#endif  // LITTLEWOOD_ERROR_HPP_
