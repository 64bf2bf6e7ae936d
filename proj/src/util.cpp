#include "udproj/util.hpp"

#include <cstdio>

namespace udproj {

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string strip_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!is_ascii_space(c)) out += c;
  return out;
}

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out += (b0 >= 'A' && b0 <= 'Z') ? static_cast<char>(b0 + 32) : s[i];
      ++i;
      continue;
    }
    if (i + 1 < s.size() && (b0 == 0xD0 || b0 == 0xD1 || b0 == 0xD2 || b0 == 0xD3)) {
      unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
      unsigned cp = (unsigned(b0 & 0x1F) << 6) | (b1 & 0x3F);
      unsigned lower = cp;
      if (cp >= 0x0410 && cp <= 0x042F) lower = cp + 0x20;       // А-Я
      else if (cp == 0x0401) lower = 0x0451;                     // Ё
      else if (cp == 0x04A2) lower = 0x04A3;                     // Ң
      else if (cp == 0x04E8) lower = 0x04E9;                     // Ө
      else if (cp == 0x04AE) lower = 0x04AF;                     // Ү
      out += static_cast<char>(0xC0 | (lower >> 6));
      out += static_cast<char>(0x80 | (lower & 0x3F));
      i += 2;
      continue;
    }
    out += s[i];
    ++i;
  }
  return out;
}

bool parse_uint(std::string_view s, long long& out) {
  if (s.empty() || s.size() > 18) return false;
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

std::string format_pct2(long long num, long long den) {
  if (den == 0) return "0.00";
  // round_half_up(10000 * num / den), exact on the rational value
  long long scaled = (20000 * num + den) / (2 * den);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", scaled / 100, scaled % 100);
  return buf;
}

std::string format_pct0(long long num, long long den) {
  if (den == 0) return "0%";
  long long scaled = (200 * num + den) / (2 * den);
  return std::to_string(scaled) + "%";
}

double pct(long long num, long long den) {
  if (den == 0) return 0.0;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace udproj
