#include "rfa/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rfa/errors.hpp"

namespace rfa::csv {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& cell) {
  // std::from_chars for doubles is patchy across standard libraries; strtod
  // plus a full-consumption check does the same job.
  std::string trimmed = cell;
  const auto first = trimmed.find_first_not_of(" \t\r");
  const auto last = trimmed.find_last_not_of(" \t\r");
  if (first == std::string::npos) {
    throw InputError("empty cell where a number was expected");
  }
  trimmed = trimmed.substr(first, last - first + 1);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(trimmed.c_str(), &end);
  if (end != trimmed.c_str() + trimmed.size() || errno == ERANGE) {
    throw InputError("not a number: '" + cell + "'");
  }
  return v;
}

std::string format_row(const std::vector<double>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += format_double(vals[i]);
  }
  return out;
}

XY read_xy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  XY out;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "x,y") {
        throw InputError(path + ":" + std::to_string(line_no) +
                         ": expected header 'x,y', got '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos ||
        line.find(',', comma + 1) != std::string::npos) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": expected exactly two columns");
    }
    try {
      out.x.push_back(parse_double(line.substr(0, comma)));
      out.y.push_back(parse_double(line.substr(comma + 1)));
    } catch (const InputError& e) {
      throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!saw_header) throw InputError(path + ": missing header 'x,y'");
  if (out.x.empty()) throw InputError(path + ": no data rows");
  return out;
}

}  // namespace rfa::csv
