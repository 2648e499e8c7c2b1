// Copyright 2026 The leichtkit Authors.
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

#ifndef LEICHTKIT_ERRORS_H_
#define LEICHTKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace leichtkit {

// Invalid parameters or inconsistent configuration (bad ratios, bad order,
// unknown metric name, ...). The CLI maps it to exit code 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File could not be read or written, or a persisted artifact is malformed.
// The CLI maps it to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation could not be carried out on the given data (empty sample,
// singular system, ...). The CLI maps it to exit code 3.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leichtkit

#endif  // LEICHTKIT_ERRORS_H_
