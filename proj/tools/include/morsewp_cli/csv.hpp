#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace morsewp::cli {

/// Comma-separated output with a header line and LF terminators. Reals are
/// written in scientific notation with `precision` digits after the point;
/// integer columns are written as integers.
class CsvWriter {
 public:
  // Throws IoError if the file cannot be created.
  CsvWriter(const std::filesystem::path& path, int precision);

  void header(const std::vector<std::string>& names);

  CsvWriter& integer(long long v);
  CsvWriter& real(double v);
  CsvWriter& text(const std::string& v);
  void end_row();

  // Flushes and closes; throws IoError if any write failed.
  void close();
  ~CsvWriter();

 private:
  void separator();

  std::filesystem::path path_;
  std::ofstream out_;
  int precision_;
  bool row_started_ = false;
};

std::string format_real(double v, int precision);

}  // namespace morsewp::cli
