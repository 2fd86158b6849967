#include "abranch/csvutil.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "abranch/error.hpp"

namespace abranch::csv {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string fmt_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

double parse_double(const std::string& s, const std::string& context) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    fail(Errc::csv_schema, context + ": not a number: '" + s + "'");
  }
  return v;
}

long parse_long(const std::string& s, const std::string& context) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    fail(Errc::csv_schema, context + ": not an integer: '" + s + "'");
  }
  return v;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& file,
                                               const std::string& expected_header) {
  std::ifstream in(file);
  if (!in) fail(Errc::file_not_found, "cannot open " + file.string());
  std::string line;
  if (!std::getline(in, line)) fail(Errc::csv_schema, file.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header) {
    fail(Errc::csv_schema,
         file.string() + ": bad header '" + line + "', expected '" + expected_header + "'");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split(line, ','));
  }
  return rows;
}

void write_text_file(const std::filesystem::path& file, const std::string& contents) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot write " + file.string());
  out << contents;
  if (!out) fail(Errc::io_failure, "short write to " + file.string());
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(Errc::file_not_found, "cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace abranch::csv
