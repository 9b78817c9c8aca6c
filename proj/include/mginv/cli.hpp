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

#include <ostream>

namespace mginv::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,       // unreadable file, bad shape, singular M, bad flags
  kNumericalFailure = 2, // residual above tolerance or failed verification
  kLawViolation = 3,     // law hypotheses hold but its conclusion fails
};

// Runs the mginv command line. Reports and summaries go to out, diagnostics to
// err. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mginv::cli
