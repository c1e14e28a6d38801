#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "solpen/error_norms.hpp"
#include "solpen/field.hpp"
#include "solpen/mesh.hpp"
#include "solpen/study.hpp"

namespace solpen {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All writers emit one header row followed by data rows; numbers carry 17
/// significant digits so a reread reproduces every double exactly. The error
/// table ends with one comment line holding the fitted slopes.

/// Columns x,N,Gamma,M at the cell centers.
void write_snapshot_csv(const FieldArray& field, const Mesh1D& mesh, double t,
                        const std::string& path);

/// Columns eta,l1_N,l1_dxN,l1_Gamma,l1_dxGamma plus the slope comment line.
void write_error_csv(const std::vector<ErrorReport>& reports, const SlopeFit& slopes,
                     const std::string& path);

/// Columns cells,eta,t_blowup,x_peak,peak_value.
void write_blowup_csv(const std::vector<BlowupRow>& rows, const std::string& path);

struct SnapshotTable {
  std::vector<double> x, N, Gamma, M;
};

struct ErrorTable {
  std::vector<ErrorReport> reports;
  std::string slope_comment;  // trailing comment line, '#' stripped
};

SnapshotTable read_snapshot_csv(const std::string& path);
ErrorTable read_error_csv(const std::string& path);
std::vector<BlowupRow> read_blowup_csv(const std::string& path);

}  // namespace solpen
