// Copyright 2026 The genrig Authors
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

#include <stdexcept>
#include <string>

namespace genrig {

// Caller supplied something outside an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized computation produced an inconsistent answer (an unlucky
// sample). Retrying with a different seed is the expected recovery.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// random_kernel_element on a matrix with trivial right null space.
class NoStressError : public std::runtime_error {
 public:
  NoStressError() : std::runtime_error("no nonzero stress exists") {}
};

}  // namespace genrig
