// Copyright 2026 The parasol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace parasol {

/// Base class for every failure the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed rational literals, unknown preset names, bad argument combinations.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Mismatched dimensions, ranks or index variances.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Metric (or other matrix required to be invertible) has deficient rank.
class SingularMetricError : public Error {
 public:
  using Error::Error;
};

/// Manifold file could not be parsed or failed a load-time invariant.
/// Carries the offending location, e.g. "brackets[2]" or "metric[1][3]".
class SpecFileError : public Error {
 public:
  SpecFileError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace parasol
