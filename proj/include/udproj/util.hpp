#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace udproj {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Splits on a single delimiter, keeping empty fields.
std::vector<std::string> split(std::string_view s, char delim);

// Splits on runs of ASCII whitespace, dropping empty fields.
std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_ascii_space(char c);

// Copy of s with all ASCII whitespace characters removed.
std::string strip_ws(std::string_view s);

// Lowercases ASCII letters and the Cyrillic ranges used by the target
// languages (А-Я, Ё, and the Kyrgyz letters Ң/Ө/Ү). Other bytes pass through.
std::string fold_case(std::string_view s);

// Parses a non-negative decimal integer; returns false on any other input.
bool parse_uint(std::string_view s, long long& out);

// num/den as a percentage with two decimals, rounded half-up exactly on the
// rational value. den == 0 yields "0.00".
std::string format_pct2(long long num, long long den);

// Same, rounded to a whole percent ("91%").
std::string format_pct0(long long num, long long den);

// num/den * 100 as a double; 0.0 when den == 0.
double pct(long long num, long long den);

}  // namespace udproj
