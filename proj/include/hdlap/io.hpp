#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdlap {

/// Full-precision float formatting ("%.17g").
std::string format_g17(double v);

/// RFC-4180 CSV: CRLF line endings, header row, quoting only where needed.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& cells);
  void row_values(const std::vector<double>& values);

 private:
  std::ostream& out_;
};

}  // namespace hdlap
