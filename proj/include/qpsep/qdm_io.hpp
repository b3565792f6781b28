#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qpsep/criteria.hpp"
#include "qpsep/states.hpp"

namespace qpsep {

// QDM v1, a line-oriented text format for qubit density matrices:
//
//   qdm 1
//   qubits N
//   <2^N rows of 2^N complex tokens>
//
// A complex token is <re><sign><im>i, e.g. 0.25-0.5i or 0+0i; decimal and
// scientific notation are both accepted. Lines starting with '#' are
// comments. Values are written with the shortest decimal representation
// that round-trips, so save followed by load is lossless.

/// Serializes to QDM v1.
std::string matrix_to_qdm(const DensityMatrix& rho);

/// Parses QDM v1 and validates the result as a density matrix at tolerance
/// tol. Throws ParseError with a 1-based line/column position, or the
/// validation error from validate_density.
DensityMatrix matrix_from_qdm(const std::string& text, double tol = kDensityTol);

void save_matrix(const DensityMatrix& rho, const std::filesystem::path& path);
DensityMatrix load_matrix(const std::filesystem::path& path,
                          double tol = kDensityTol);

enum class ReportFormat { Text, Json };

/// Renders a report. Text: one verdict line per partition plus a final
/// "entangled:" line. Json: object with num_qubits, tolerance, partitions
/// (partition, min_pt_eigenvalue, reduced_separable, verdict) and
/// entangled, keys in that order. Both are byte-stable for a fixed report.
std::string write_report(const SeparabilityReport& report, ReportFormat format);

/// One verdict as a text line: "A|BC: INSEPARABLE (min PT eig -0.125)".
std::string format_verdict_line(const Verdict& v);

/// Shortest round-trip decimal form of a double ("-0" normalized to "0").
std::string format_double(double value);

} // namespace qpsep
