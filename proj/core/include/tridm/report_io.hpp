// Copyright 2026 the tri-dm authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "tridm/sweep.hpp"
#include "tridm/validation.hpp"

namespace tridm {

/// One value formatted with 12 significant digits ("%.12g").
std::string format_value(double v);

/// The full CSV document for a table: a `# tri-dm v...` metadata line, a
/// column header, then one row per grid point. 12 significant digits,
/// LF line endings, UTF-8. Byte-identical for identical inputs.
std::string csv_string(const SweepTable& table);

/// Write csv_string(table) to `path`. Throws IoError on failure.
void emit_csv(const SweepTable& table, const std::filesystem::path& path);

/// One SVG line chart per partition, named <stem>_<PARTITION>.svg next to
/// `stem`. Two-qubit partitions plot C, N, EF and Inon; single-qubit and
/// whole-system partitions plot Inon. Returns the files written.
std::vector<std::filesystem::path> emit_svg(const SweepTable& table,
                                            const std::filesystem::path& stem);

/// Machine-readable validation report (one CSV row per record).
std::string validation_csv(const ValidationReport& report);
void emit_validation_csv(const ValidationReport& report, const std::filesystem::path& path);

/// Human-readable validation summary for standard output.
std::string validation_summary(const ValidationReport& report);

}  // namespace tridm
