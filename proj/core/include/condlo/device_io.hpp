// Copyright 2026 The condlo Authors
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

// Device description files.
//
// A device file is a JSON document:
//
//   {
//     "schema_version": 1,
//     "modes": ["1", "2", "3"]                      (or {"input": [...], "output": [...]}),
//     "unitary": [[[re, im], ...], ...],             rows = input modes
//     "input_partition":  {"computational": [...], "ancilla": [...]},
//     "output_partition": {"computational": [...], "ancilla": [...]},
//     "ancilla": [{"p": 1.0, "ket": [{"occupations": [1, 0], "re": 1.0, "im": 0.0}]}],
//     "subspace_in": [ket, ...],
//     "subspace_out": [ket, ...],                    optional
//     "outcomes": [{"signature": [ket, ...], "correction": "identity" | matrix}]
//   }
//
// Instead of "ancilla", a file may give "ancilla_density": {"basis": [ket, ...],
// "matrix": matrix}; the spectral decomposition of that matrix is used.
//
// Occupation lists are per-mode counts in the order of the partition side the
// ket lives on: ancilla kets use input_partition.ancilla, subspace_in uses
// input_partition.computational, subspace_out uses
// output_partition.computational and signatures use output_partition.ancilla.

#include <filesystem>
#include <string>
#include <string_view>

#include "condlo/device.hpp"

namespace condlo {

inline constexpr int kDeviceSchemaVersion = 1;

/// Throws ParseError for malformed text or schema violations and
/// ValidationError for physically invalid devices.
ConditionalDevice parse_device(std::string_view text);

ConditionalDevice load_device(const std::filesystem::path& path);

/// Canonical JSON text (two-space indent, trailing newline).
std::string export_device(const ConditionalDevice& dev);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace condlo
