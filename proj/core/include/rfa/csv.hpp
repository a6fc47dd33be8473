#pragma once

#include <string>
#include <vector>

namespace rfa::csv {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// Strict full-cell parse; throws InputError naming the offending cell.
double parse_double(const std::string& cell);

/// Join numeric cells with commas (no trailing newline).
std::string format_row(const std::vector<double>& vals);

struct XY {
  std::vector<double> x;
  std::vector<double> y;
};

/// Read a two-column numeric CSV with header "x,y". Blank lines are
/// ignored; anything else malformed throws InputError with the line number.
XY read_xy(const std::string& path);

}  // namespace rfa::csv
