#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace epistat::utf8 {

// One decoded scalar value plus the byte range it occupied in the source.
struct DecodedChar {
  char32_t ch;
  std::size_t byte_begin;
  std::size_t byte_end;
};

// Decodes UTF-8; invalid sequences become U+FFFD covering the offending byte.
std::vector<DecodedChar> decode(std::string_view text);

void append(std::string& out, char32_t ch);
std::string encode(const std::u32string& chars);

// Number of Unicode scalar values in the byte string.
std::size_t scalar_count(std::string_view text);

}  // namespace epistat::utf8
