#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "vnibcreg/common/check.hpp"

namespace vnibcreg {
namespace binio {

// All on-disk integers and floats are little-endian.

inline void write_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v),
                        static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

inline void write_i64(std::ostream& os, std::int64_t v) {
  auto u = static_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

inline void write_f32(std::ostream& os, float v) {
  write_u32(os, std::bit_cast<std::uint32_t>(v));
}

inline void write_f64(std::ostream& os, double v) {
  write_i64(os, std::bit_cast<std::int64_t>(v));
}

inline void write_string(std::ostream& os, const std::string& s) {
  write_u32(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline void write_f32_array(std::ostream& os, const float* data, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(data),
             static_cast<std::streamsize>(n * sizeof(float)));
  } else {
    for (std::size_t i = 0; i < n; ++i) write_f32(os, data[i]);
  }
}

inline std::uint32_t read_u32(std::istream& is, const char* what) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  VNIB_CHECK(is.good(), "unexpected end of file reading ", what);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

inline std::int64_t read_i64(std::istream& is, const char* what) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  VNIB_CHECK(is.good(), "unexpected end of file reading ", what);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return static_cast<std::int64_t>(u);
}

inline float read_f32(std::istream& is, const char* what) {
  return std::bit_cast<float>(read_u32(is, what));
}

inline double read_f64(std::istream& is, const char* what) {
  return std::bit_cast<double>(read_i64(is, what));
}

inline std::string read_string(std::istream& is, const char* what) {
  const std::uint32_t n = read_u32(is, what);
  std::string s(n, '\0');
  is.read(s.data(), n);
  VNIB_CHECK(is.good(), "unexpected end of file reading ", what);
  return s;
}

inline void read_f32_array(std::istream& is, float* data, std::size_t n,
                           const char* what) {
  if constexpr (std::endian::native == std::endian::little) {
    is.read(reinterpret_cast<char*>(data),
            static_cast<std::streamsize>(n * sizeof(float)));
    VNIB_CHECK(is.good(), "unexpected end of file reading ", what);
  } else {
    for (std::size_t i = 0; i < n; ++i) data[i] = read_f32(is, what);
  }
}

inline void read_magic(std::istream& is, const std::string& expect,
                       const std::string& context) {
  std::string got(expect.size(), '\0');
  is.read(got.data(), static_cast<std::streamsize>(expect.size()));
  VNIB_CHECK(is.good() && got == expect, context, ": bad magic, expected \"",
             expect, "\"");
}

/// Writes a file atomically: the payload goes to a sibling temp file that is
/// renamed into place, so readers never observe a partial file.
template <class WriteFn>
void atomic_write(const std::filesystem::path& path, WriteFn&& fn) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    VNIB_CHECK(os.good(), "cannot open ", tmp.string(), " for writing");
    fn(os);
    os.flush();
    VNIB_CHECK(os.good(), "write failed for ", tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace binio
}  // namespace vnibcreg
