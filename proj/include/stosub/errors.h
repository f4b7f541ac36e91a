// Copyright 2026 The Authors.
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

#ifndef STOSUB_ERRORS_H_
#define STOSUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace stosub {

// Raised when an exhaustive computation would exceed its enumeration guard.
// Callers get an explicit refusal instead of a silent fallback to sampling.
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stosub

#endif  // STOSUB_ERRORS_H_
