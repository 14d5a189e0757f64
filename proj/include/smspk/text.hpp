#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace smspk {

std::string trim(const std::string& s);

// Splits on any run of the given delimiter; a '\t' delimiter splits on single
// tabs (TSV fields may be empty).
std::vector<std::string> split_fields(const std::string& line, char delim);

// Whitespace-token split (for the pathway text format).
std::vector<std::string> split_tokens(const std::string& line);

// Numbers exchanged through files are rounded to 12 significant digits.
std::string format_g12(double value);

double parse_double(const std::string& s, int line = 0);
long parse_long(const std::string& s, int line = 0);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace smspk
