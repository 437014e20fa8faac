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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "support/test_helpers.hpp"
#include "tridm/errors.hpp"
#include "tridm/presets.hpp"
#include "tridm/report_io.hpp"
#include "tridm/sweep.hpp"

using namespace tridm;
using tridm_test::kPi;

namespace {

SweepTable small_table(std::vector<PartitionId> partitions) {
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3, kPi / 2, 0.9, 2.0, 0.5);
  cfg.t_start = 0.0;
  cfg.t_end = 1.0;
  cfg.n_steps = 5;
  cfg.propagator = Propagator::factorized;
  cfg.partitions = std::move(partitions);
  return time_sweep(cfg);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<double> parse_csv_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

// Minimal well-formedness scan: every <tag ...> is matched or self-closing,
// and the prolog is present.
bool xml_well_formed(const std::string& text) {
  if (text.rfind("<?xml", 0) != 0) return false;
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    if (text[pos + 1] == '?') {
      pos = text.find("?>", pos);
      if (pos == std::string::npos) return false;
      continue;
    }
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    if (!tag.empty() && tag.back() == '/') {
      pos = end;
      continue;  // self-closing
    }
    if (!tag.empty() && tag.front() == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else {
      const std::size_t sp = tag.find_first_of(" \t\n");
      stack.push_back(sp == std::string::npos ? tag : tag.substr(0, sp));
    }
    pos = end;
  }
  return stack.empty();
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("format_value emits 12 significant digits") {
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(2.0) == "2");
  CHECK(format_value(kPi / 3.0) == "1.0471975512");
}

TEST_CASE("csv header layout is pinned") {
  const SweepTable table = small_table({PartitionId::AB, PartitionId::AC});
  const std::vector<std::string> lines = split_lines(csv_string(table));
  REQUIRE(lines.size() == 2 + 5);
  CHECK(lines[0] ==
        "# tri-dm v0.1.0; propagator=factorized; info_mode=total; params: "
        "alpha=1.0471975512,gamma=1.57079632679,kappa=0.9,omega=2,dz=0.5");
  CHECK(lines[1] == "t,AB_C,AB_N,AB_EF,AB_purity,AB_Inon,AC_C,AC_N,AC_EF,AC_purity,AC_Inon");
  CHECK(parse_csv_row(lines[2]).size() == 11);
}

TEST_CASE("non-pair partitions emit purity and Inon columns only") {
  const SweepTable table = small_table({PartitionId::ABC, PartitionId::C});
  const std::vector<std::string> lines = split_lines(csv_string(table));
  CHECK(lines[1] == "t,ABC_purity,ABC_Inon,C_purity,C_Inon");
  CHECK(parse_csv_row(lines[2]).size() == 5);
}

TEST_CASE("empty-partition config yields header plus bare t column") {
  const SweepTable table = small_table({});
  const std::vector<std::string> lines = split_lines(csv_string(table));
  CHECK(lines[1] == "t");
  CHECK(parse_csv_row(lines[2]).size() == 1);
  CHECK(parse_csv_row(lines[2])[0] == 0.0);
}

TEST_CASE("kappa tables label the axis column kappa") {
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3, kPi / 2, 0.0, 2.0, 0.5);
  cfg.partitions = {PartitionId::AB};
  const SweepTable table = kappa_sweep(cfg, {0.0, 0.5, 1.0}, 0.0);
  const std::vector<std::string> lines = split_lines(csv_string(table));
  CHECK(lines[1].rfind("kappa,", 0) == 0);
}

TEST_CASE("csv round-trips through text at 1e-11") {
  const SweepTable table = small_table({PartitionId::AB, PartitionId::BC});
  const std::vector<std::string> lines = split_lines(csv_string(table));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::vector<double> cells = parse_csv_row(lines[2 + i]);
    const MeasureSet& ab = table.rows[i].entries[0].measures;
    const MeasureSet& bc = table.rows[i].entries[1].measures;
    CHECK(std::abs(cells[0] - table.rows[i].x) < 1e-11);
    CHECK(std::abs(cells[1] - ab.concurrence) < 1e-11);
    CHECK(std::abs(cells[2] - ab.negativity) < 1e-11);
    CHECK(std::abs(cells[3] - ab.eof) < 1e-11);
    CHECK(std::abs(cells[4] - ab.purity) < 1e-11);
    CHECK(std::abs(cells[5] - ab.info_nonlocal) < 1e-11);
    CHECK(std::abs(cells[10] - bc.info_nonlocal) < 1e-11);
  }
}

TEST_CASE("csv output is deterministic and uses LF endings") {
  const std::string a = csv_string(small_table({PartitionId::AB}));
  const std::string b = csv_string(small_table({PartitionId::AB}));
  CHECK(a == b);
  CHECK(a.find('\r') == std::string::npos);
  CHECK(a.back() == '\n');
}

TEST_CASE("emit_csv and emit_svg write files; bad paths raise IoError") {
  const SweepTable table = small_table({PartitionId::AB});
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "tridm_io_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path csv = dir / "out.csv";
  emit_csv(table, csv);
  CHECK(std::filesystem::exists(csv));

  const auto svgs = emit_svg(table, dir / "out");
  REQUIRE(svgs.size() == 1);
  CHECK(svgs[0].filename() == "out_AB.svg");
  CHECK(std::filesystem::exists(svgs[0]));

  CHECK_THROWS_AS(emit_csv(table, "/nonexistent_dir_tridm/x.csv"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg charts are well-formed and complete") {
  const SweepTable table = small_table({PartitionId::AB, PartitionId::C});
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "tridm_svg_test";
  std::filesystem::create_directories(dir);
  const auto svgs = emit_svg(table, dir / "chart");
  REQUIRE(svgs.size() == 2);

  std::ifstream in(svgs[0], std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string ab_svg = buf.str();
  CHECK(xml_well_formed(ab_svg));
  // four quantifier polylines for a pair partition
  CHECK(count_occurrences(ab_svg, "<polyline") == 4);
  // each polyline has one point per row
  std::size_t pos = ab_svg.find("points=\"");
  REQUIRE(pos != std::string::npos);
  const std::size_t end = ab_svg.find('"', pos + 8);
  const std::string pts = ab_svg.substr(pos + 8, end - pos - 8);
  CHECK(static_cast<std::size_t>(count_occurrences(pts, ",")) == table.rows.size());
  // legend labels present
  CHECK(ab_svg.find(">C</text>") != std::string::npos);
  CHECK(ab_svg.find(">N</text>") != std::string::npos);
  CHECK(ab_svg.find(">E_F</text>") != std::string::npos);
  CHECK(ab_svg.find(">I_non</text>") != std::string::npos);

  std::ifstream in_c(svgs[1], std::ios::binary);
  std::stringstream buf_c;
  buf_c << in_c.rdbuf();
  CHECK(xml_well_formed(buf_c.str()));
  CHECK(count_occurrences(buf_c.str(), "<polyline") == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a constant-zero series draws a baseline polyline") {
  // omega = dz = 0 with kappa below the entanglement threshold keeps C at 0
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3, kPi / 2, 0.2, 0.0, 0.0);
  cfg.t_start = 0.0;
  cfg.t_end = 1.0;
  cfg.n_steps = 4;
  cfg.partitions = {PartitionId::AB};
  const SweepTable table = time_sweep(cfg);
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "tridm_svg_zero";
  std::filesystem::create_directories(dir);
  const auto svgs = emit_svg(table, dir / "zero");
  std::ifstream in(svgs[0], std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string svg = buf.str();
  // the first polyline is C; all its y coordinates equal the axis baseline
  const std::size_t pos = svg.find("points=\"");
  REQUIRE(pos != std::string::npos);
  const std::size_t end = svg.find('"', pos + 8);
  std::stringstream pts(svg.substr(pos + 8, end - pos - 8));
  std::string pt;
  std::string first_y;
  while (std::getline(pts, pt, ' ')) {
    const std::string y = pt.substr(pt.find(',') + 1);
    if (first_y.empty()) first_y = y;
    CHECK(y == first_y);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("validation report csv and summary") {
  ValidationGrids grids;
  grids.kappa = {0.5};
  grids.dz = {0.0};
  grids.t = {0.0, 1.0};
  const ValidationReport report = validate_closed_forms(grids);
  const std::string csv = validation_csv(report);
  const std::vector<std::string> lines = split_lines(csv);
  REQUIRE(lines.size() == 2 + report.records.size());
  CHECK(lines[1] ==
        "kappa,dz,t,pair,trace_dev,herm_dev,min_eig,dist_exact,dist_factorized,"
        "propagator_gap");

  const std::string summary = validation_summary(report);
  CHECK(summary.find("closed-form validation: 6 records") != std::string::npos);
  CHECK(summary.find("[oracle-consistent]") != std::string::npos);
}
