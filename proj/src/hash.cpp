#include "drazin/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>

namespace drazin {

namespace {
void append_double(std::string& out, double v) {
  std::array<char, 32> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), p);
}
}  // namespace

std::string canonical_serialization(const Matrix& a) {
  std::string s = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ":";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      append_double(s, a.at(i, j).real());
      s.push_back(',');
      append_double(s, a.at(i, j).imag());
      s.push_back(';');
    }
  return s;
}

std::string canonical_hash(const Matrix& a) {
  const std::string s = canonical_serialization(a);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(s.data(), s.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < 8; ++i) {  // 8 bytes -> 16 hex chars
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace drazin
