#ifndef VDW_CSV_HPP
#define VDW_CSV_HPP

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "vdw/errors.hpp"

namespace vdw {

// Locale-independent formatting with 17 significant digits.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path) {
    if (!out_) throw Error("cannot open output file: " + path);
    for (size_t i = 0; i < header.size(); ++i)
      out_ << (i ? "," : "") << header[i];
    out_ << "\n";
  }
  void row(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i)
      out_ << (i ? "," : "") << format_double(values[i]);
    out_ << "\n";
  }
  void raw_row(const std::vector<std::string>& values) {
    for (size_t i = 0; i < values.size(); ++i)
      out_ << (i ? "," : "") << values[i];
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

}  // namespace vdw

#endif
