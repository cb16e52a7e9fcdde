#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcm/indicators.hpp"
#include "pcm/matrix.hpp"

namespace pcm {

inline constexpr const char* kToolVersion = "0.1.0";

enum class MatrixFormat { csv_full, csv_upper };

MatrixFormat parse_format(const std::string& name);  // throws ParseError

// Parses a CSV matrix file. csv-full holds the whole n x n grid, one row
// per line; csv-upper holds the upper triangle, row i carrying n-1-i
// values, with the rest filled by reciprocity. Malformed input raises
// ParseError with line/column; invariant violations propagate from the
// matrix constructors.
PCMatrix parse_matrix(const std::string& path, MatrixFormat format);
PCMatrix parse_matrix_text(const std::string& text, MatrixFormat format);

std::string serialize_matrix(const PCMatrix& m, MatrixFormat format);

// The analyze report: input echo, per-triad table, matrix kii, worst
// triad, CI, verdict. The JSON form is the machine contract; the text
// form is an aligned-column rendering of the same data.
struct AnalysisDocument {
  PCMatrix matrix;
  IndicatorReport report;
  double tolerance;
};

AnalysisDocument analyze(const PCMatrix& m, double tolerance);

std::string to_json(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);

// Full command-line front end. Returns the process exit code:
// 0 success, 1 domain failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pcm
