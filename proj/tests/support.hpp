#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef UDPROJ_FIXTURE_DIR
#define UDPROJ_FIXTURE_DIR "tests/fixtures"
#endif

#ifndef UDPROJ_DATA_DIR
#define UDPROJ_DATA_DIR "data"
#endif

namespace udproj::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(UDPROJ_FIXTURE_DIR) + "/" + name;
}

inline std::string data_path(const std::string& name) {
  return std::string(UDPROJ_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Fresh directory under the system temp root, unique per call.
inline std::string make_temp_dir(const std::string& tag) {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path() /
             ("udproj_" + tag + "_" + std::to_string(++counter) + "_" +
              std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace udproj::test
