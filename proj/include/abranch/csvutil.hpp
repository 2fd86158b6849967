#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace abranch::csv {

std::vector<std::string> split(const std::string& line, char delim);

// Fixed-point formatting ("%.*f"); all profile/log floats are written this way
// so serialized output is byte-stable across runs.
std::string fmt_fixed(double v, int decimals);
// Significant-digit formatting ("%.*g"), used for boundary cuts.
std::string fmt_sig(double v, int digits);

double parse_double(const std::string& s, const std::string& context);
long parse_long(const std::string& s, const std::string& context);

// Reads a CSV file, checks the exact header, returns the data rows split by comma.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& file,
                                               const std::string& expected_header);

void write_text_file(const std::filesystem::path& file, const std::string& contents);
std::string read_text_file(const std::filesystem::path& file);

}  // namespace abranch::csv
