// Copyright 2026 The blochsep authors
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

namespace blochsep {

/// Thrown when a request would exceed a configured resource budget
/// (for example the correlation-tensor entry cap).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown when no criterion covers the given party count / dimension
/// configuration.
class UnsupportedConfigError : public std::runtime_error {
 public:
  explicit UnsupportedConfigError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace blochsep
