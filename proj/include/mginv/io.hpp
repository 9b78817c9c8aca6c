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

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "mginv/laws.hpp"
#include "mginv/tensor.hpp"

namespace mginv::io {

using Json = nlohmann::json;

// TensorFile: {"dims":[r,c,t], "data":data[k][i][j] = [re, im], "name"?}.
Json tensor_to_json(const Tensor3& t, const std::optional<std::string>& name = std::nullopt);
Tensor3 tensor_from_json(const Json& doc);

// MatrixFile: {"rows":r, "cols":c, "data":data[i][j] = [re, im]}.
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& doc);

Json report_to_json(const ResidualReport& report);
Json law_outcome_to_json(const LawOutcome& outcome);

// Read failures and schema violations throw FormatError.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);

Tensor3 read_tensor_file(const std::filesystem::path& path);
Matrix read_matrix_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const Tensor3& t,
                       const std::optional<std::string>& name = std::nullopt);

}  // namespace mginv::io
