// Copyright 2026 The mginv Authors
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

namespace mginv {

// Shapes do not conform for the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that must be invertible is numerically singular.
class SingularError : public std::runtime_error {
 public:
  explicit SingularError(const std::string& what, long slice = -1)
      : std::runtime_error(what), slice_(slice) {}

  // Frontal slice (transform domain) that failed, or -1 when not slice-bound.
  long slice() const { return slice_; }

 private:
  long slice_;
};

// A computed factorization or inverse misses its defining residual bound.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented precondition (e.g. a non-nilpotent block).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A file or document does not match its schema.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mginv
