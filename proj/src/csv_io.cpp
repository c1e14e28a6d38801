#include "solpen/csv_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace solpen {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

FileHandle open_for_write(const std::string& path) {
  FileHandle f(std::fopen(path.c_str(), "w"));
  if (!f) throw IoError("cannot open for writing: " + path);
  return f;
}

void finish_write(FileHandle f, const std::string& path) {
  const bool bad = std::ferror(f.get()) != 0;
  f.reset();
  if (bad) throw IoError("write failed: " + path);
}

std::vector<double> split_numbers(const std::string& line, std::size_t expected,
                                  const std::string& path) {
  std::vector<double> out;
  out.reserve(expected);
  const char* p = line.c_str();
  while (true) {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) throw IoError("malformed numeric row in " + path + ": " + line);
    out.push_back(v);
    p = end;
    if (*p == '\0') break;
    if (*p != ',') throw IoError("malformed separator in " + path + ": " + line);
    ++p;
  }
  if (out.size() != expected)
    throw IoError("wrong column count in " + path + ": " + line);
  return out;
}

/// Header line, data rows, and optional '#' comment lines (captured).
struct RawTable {
  std::string header;
  std::vector<std::string> rows;
  std::vector<std::string> comments;
};

RawTable read_raw(const std::string& path, const std::string& expected_header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);

  RawTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::size_t start = 1;
      while (start < line.size() && line[start] == ' ') ++start;
      table.comments.push_back(line.substr(start));
      continue;
    }
    if (table.header.empty()) {
      table.header = line;
      continue;
    }
    table.rows.push_back(line);
  }
  if (table.header != expected_header)
    throw IoError("unexpected header in " + path + ": got '" + table.header + "', want '" +
                  expected_header + "'");
  return table;
}

}  // namespace

void write_snapshot_csv(const FieldArray& field, const Mesh1D& mesh, double t,
                        const std::string& path) {
  (void)t;  // the snapshot time is echoed by the CLI, not stored in the table
  FileHandle f = open_for_write(path);
  std::fprintf(f.get(), "x,N,Gamma,M\n");
  for (int i = 0; i < mesh.n_cells; ++i) {
    const ConservativeState& u = field.cell(i);
    std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g\n", mesh.center(i), u.N, u.Gamma,
                 u.Gamma / floor_density(u.N));
  }
  finish_write(std::move(f), path);
}

void write_error_csv(const std::vector<ErrorReport>& reports, const SlopeFit& slopes,
                     const std::string& path) {
  FileHandle f = open_for_write(path);
  std::fprintf(f.get(), "eta,l1_N,l1_dxN,l1_Gamma,l1_dxGamma\n");
  for (const ErrorReport& r : reports)
    std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.eta, r.l1_N, r.l1_dxN, r.l1_Gamma,
                 r.l1_dxGamma);
  std::fprintf(f.get(), "# slope_N=%.15f slope_dxN=%.15f slope_Gamma=%.15f slope_dxGamma=%.15f\n",
               slopes.N, slopes.dxN, slopes.Gamma, slopes.dxGamma);
  finish_write(std::move(f), path);
}

void write_blowup_csv(const std::vector<BlowupRow>& rows, const std::string& path) {
  FileHandle f = open_for_write(path);
  std::fprintf(f.get(), "cells,eta,t_blowup,x_peak,peak_value\n");
  for (const BlowupRow& r : rows)
    std::fprintf(f.get(), "%d,%.17g,%.17g,%.17g,%.17g\n", r.cells, r.eta, r.report.t_blowup,
                 r.report.x_peak, r.report.peak_value);
  finish_write(std::move(f), path);
}

SnapshotTable read_snapshot_csv(const std::string& path) {
  const RawTable raw = read_raw(path, "x,N,Gamma,M");
  SnapshotTable table;
  for (const std::string& row : raw.rows) {
    const std::vector<double> v = split_numbers(row, 4, path);
    table.x.push_back(v[0]);
    table.N.push_back(v[1]);
    table.Gamma.push_back(v[2]);
    table.M.push_back(v[3]);
  }
  return table;
}

ErrorTable read_error_csv(const std::string& path) {
  const RawTable raw = read_raw(path, "eta,l1_N,l1_dxN,l1_Gamma,l1_dxGamma");
  ErrorTable table;
  for (const std::string& row : raw.rows) {
    const std::vector<double> v = split_numbers(row, 5, path);
    table.reports.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  if (!raw.comments.empty()) table.slope_comment = raw.comments.back();
  return table;
}

std::vector<BlowupRow> read_blowup_csv(const std::string& path) {
  const RawTable raw = read_raw(path, "cells,eta,t_blowup,x_peak,peak_value");
  std::vector<BlowupRow> rows;
  for (const std::string& row : raw.rows) {
    const std::vector<double> v = split_numbers(row, 5, path);
    BlowupRow r;
    r.cells = static_cast<int>(v[0]);
    r.eta = v[1];
    r.report.t_blowup = v[2];
    r.report.x_peak = v[3];
    r.report.peak_value = v[4];
    // The flag is not serialized (the threshold is not either); numeric
    // columns are the roundtrip contract.
    rows.push_back(r);
  }
  return rows;
}

}  // namespace solpen
