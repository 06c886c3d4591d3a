#include "morsewp_cli/csv.hpp"

#include <cstdio>

#include "morsewp_cli/config.hpp"

namespace morsewp::cli {

std::string format_real(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", precision, v);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, int precision)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), precision_(precision) {
  if (!out_) throw IoError("cannot write " + path.string());
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const auto& n : names) text(n);
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) out_.put(',');
  row_started_ = true;
}

CsvWriter& CsvWriter::integer(long long v) {
  separator();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::real(double v) {
  separator();
  out_ << format_real(v, precision_);
  return *this;
}

CsvWriter& CsvWriter::text(const std::string& v) {
  separator();
  out_ << v;
  return *this;
}

void CsvWriter::end_row() {
  out_.put('\n');
  row_started_ = false;
}

void CsvWriter::close() {
  if (!out_.is_open()) return;
  out_.close();
  if (out_.fail()) throw IoError("error while writing " + path_.string());
}

CsvWriter::~CsvWriter() {
  if (out_.is_open()) out_.close();
}

}  // namespace morsewp::cli
