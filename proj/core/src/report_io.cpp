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

#include "tridm/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tridm/errors.hpp"
#include "tridm/version.hpp"

namespace tridm {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string header_line(const SweepConfig& cfg) {
  std::ostringstream os;
  os << "# tri-dm v" << kVersion << "; propagator=" << propagator_name(cfg.propagator)
     << "; info_mode=" << info_mode_name(cfg.info_mode) << "; params: alpha="
     << format_value(cfg.params.alpha) << ",gamma=" << format_value(cfg.params.gamma)
     << ",kappa=" << format_value(cfg.params.kappa) << ",omega="
     << format_value(cfg.params.omega) << ",dz=" << format_value(cfg.params.dz);
  return os.str();
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_string(const SweepTable& table) {
  std::ostringstream os;
  os << header_line(table.config) << "\n";
  os << (table.axis == SweepAxis::time ? "t" : "kappa");
  for (PartitionId part : table.config.partitions) {
    const char* name = partition_name(part);
    if (partition_qubit_count(part) == 2) {
      os << "," << name << "_C," << name << "_N," << name << "_EF," << name << "_purity,"
         << name << "_Inon";
    } else {
      os << "," << name << "_purity," << name << "_Inon";
    }
  }
  os << "\n";
  for (const SweepRow& row : table.rows) {
    os << format_value(row.x);
    for (const PartitionMeasures& pm : row.entries) {
      const MeasureSet& m = pm.measures;
      if (pm.pair) {
        os << "," << format_value(m.concurrence) << "," << format_value(m.negativity) << ","
           << format_value(m.eof) << "," << format_value(m.purity) << ","
           << format_value(m.info_nonlocal);
      } else {
        os << "," << format_value(m.purity) << "," << format_value(m.info_nonlocal);
      }
    }
    os << "\n";
  }
  return os.str();
}

void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  write_file(path, csv_string(table));
}

namespace {

struct Series {
  const char* label;
  const char* color;
  std::vector<double> values;
};

std::string svg_chart(const SweepTable& table, PartitionId part) {
  const bool pair = partition_qubit_count(part) == 2;
  std::vector<Series> series;
  if (pair) {
    series.push_back({"C", "#000000", series_column(table, part, "C")});
    series.push_back({"N", "#1f77b4", series_column(table, part, "N")});
    series.push_back({"E_F", "#d62728", series_column(table, part, "EF")});
  }
  series.push_back({"I_non", "#2ca02c", series_column(table, part, "Inon")});
  const std::vector<double> xs = series_axis(table);

  const double width = 800.0, height = 500.0;
  const double ml = 70.0, mr = 20.0, mt = 30.0, mb = 50.0;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double ymax = 0.0;
  for (const Series& s : series)
    for (double v : s.values) ymax = std::max(ymax, v);
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.05;
  const double xmin = xs.front(), xmax = xs.back();
  const double xspan = (xmax > xmin) ? (xmax - xmin) : 1.0;

  auto px = [&](double x) { return ml + (x - xmin) / xspan * pw; };
  auto py = [&](double y) { return mt + ph - (y / ymax) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << ml << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
     << partition_name(part) << " (" << propagator_name(table.config.propagator) << ")</text>\n";

  // Axes
  os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
     << mt + ph << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
     << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + xspan * i / 5.0;
    const double yv = ymax * i / 5.0;
    os << "<line x1=\"" << px(xv) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(xv) << "\" y2=\""
       << mt + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 20
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
       << format_value(xv) << "</text>\n";
    os << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
       << py(yv) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
       << format_value(yv) << "</text>\n";
  }
  os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 10
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
     << (table.axis == SweepAxis::time ? "t" : "kappa") << "</text>\n";

  // Curves
  for (const Series& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << " ";
      os << format_value(px(xs[i])) << "," << format_value(py(s.values[i]));
    }
    os << "\"/>\n";
  }

  // Legend
  double ly = mt + 10.0;
  for (const Series& s : series) {
    os << "<line x1=\"" << ml + pw - 90 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw - 60
       << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << ml + pw - 55 << "\" y=\"" << ly + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    ly += 18.0;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::vector<std::filesystem::path> emit_svg(const SweepTable& table,
                                            const std::filesystem::path& stem) {
  if (table.rows.empty()) throw DomainError("emit_svg: table has no rows");
  std::vector<std::filesystem::path> written;
  for (PartitionId part : table.config.partitions) {
    std::filesystem::path path = stem;
    path += std::string("_") + partition_name(part) + ".svg";
    write_file(path, svg_chart(table, part));
    written.push_back(path);
  }
  return written;
}

std::string validation_csv(const ValidationReport& report) {
  std::ostringstream os;
  os << "# tri-dm v" << kVersion
     << "; closed-form validation; convention: alpha=pi/3,gamma=pi/2,omega=2\n";
  os << "kappa,dz,t,pair,trace_dev,herm_dev,min_eig,dist_exact,dist_factorized,"
        "propagator_gap\n";
  for (const ValidationRecord& r : report.records) {
    os << format_value(r.kappa) << "," << format_value(r.dz) << "," << format_value(r.t) << ","
       << partition_name(r.pair) << "," << format_value(r.report.trace_deviation) << ","
       << format_value(r.report.hermiticity_deviation) << ","
       << format_value(r.report.min_eigenvalue) << "," << format_value(r.report.distance_exact)
       << "," << format_value(r.report.distance_factorized) << ","
       << format_value(r.propagator_gap) << "\n";
  }
  return os.str();
}

void emit_validation_csv(const ValidationReport& report, const std::filesystem::path& path) {
  write_file(path, validation_csv(report));
}

std::string validation_summary(const ValidationReport& report) {
  std::ostringstream os;
  os << "closed-form validation: " << report.records.size() << " records ("
     << report.grids.kappa.size() << " kappa x " << report.grids.dz.size() << " dz x "
     << report.grids.t.size() << " t x 3 pairs)\n";
  for (const PairSummary& s : report.summaries) {
    os << "  " << partition_name(s.pair) << ": max |tr-1| = "
       << format_value(s.max_trace_deviation)
       << ", mean |tr-1| = " << format_value(s.mean_trace_deviation)
       << ", max herm dev = " << format_value(s.max_hermiticity_deviation)
       << ", min eig = " << format_value(s.min_eigenvalue) << "\n";
    os << "      max Frobenius distance: exact = " << format_value(s.max_distance_exact)
       << ", factorized = " << format_value(s.max_distance_factorized) << "\n";
  }
  os << "  exact vs factorized marginals: max gap = "
     << format_value(report.max_propagator_gap)
     << "; commuting-limit (dz=0) max gap = "
     << format_value(report.max_commuting_propagator_gap)
     << (report.max_commuting_propagator_gap <= 1e-9 ? " [oracle-consistent]" : " [DISAGREES]")
     << "\n";
  return os.str();
}

}  // namespace tridm
