#include "epistat/utf8.hpp"

namespace epistat::utf8 {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}

std::vector<DecodedChar> decode(std::string_view text) {
  std::vector<DecodedChar> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  while (i < text.size()) {
    const unsigned char b0 = bytes[i];
    std::size_t len = 1;
    char32_t ch = kReplacement;
    if (b0 < 0x80) {
      ch = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      if (i + 1 < text.size() && (bytes[i + 1] & 0xC0) == 0x80) {
        ch = (char32_t(b0 & 0x1F) << 6) | (bytes[i + 1] & 0x3F);
        if (ch < 0x80) ch = kReplacement;  // overlong
      } else {
        len = 1;
      }
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      if (i + 2 < text.size() && (bytes[i + 1] & 0xC0) == 0x80 &&
          (bytes[i + 2] & 0xC0) == 0x80) {
        ch = (char32_t(b0 & 0x0F) << 12) | (char32_t(bytes[i + 1] & 0x3F) << 6) |
             (bytes[i + 2] & 0x3F);
        if (ch < 0x800 || (ch >= 0xD800 && ch <= 0xDFFF)) ch = kReplacement;
      } else {
        len = 1;
      }
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      if (i + 3 < text.size() && (bytes[i + 1] & 0xC0) == 0x80 &&
          (bytes[i + 2] & 0xC0) == 0x80 && (bytes[i + 3] & 0xC0) == 0x80) {
        ch = (char32_t(b0 & 0x07) << 18) | (char32_t(bytes[i + 1] & 0x3F) << 12) |
             (char32_t(bytes[i + 2] & 0x3F) << 6) | (bytes[i + 3] & 0x3F);
        if (ch < 0x10000 || ch > 0x10FFFF) ch = kReplacement;
      } else {
        len = 1;
      }
    }
    if (ch == kReplacement && len > 1) len = 1;
    out.push_back({ch, i, i + len});
    i += len;
  }
  return out;
}

void append(std::string& out, char32_t ch) {
  if (ch < 0x80) {
    out.push_back(static_cast<char>(ch));
  } else if (ch < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (ch >> 6)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else if (ch < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (ch >> 12)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (ch >> 18)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  }
}

std::string encode(const std::u32string& chars) {
  std::string out;
  out.reserve(chars.size() * 2);
  for (char32_t ch : chars) append(out, ch);
  return out;
}

std::size_t scalar_count(std::string_view text) {
  std::size_t n = 0;
  std::size_t i = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  while (i < text.size()) {
    const unsigned char b0 = bytes[i];
    std::size_t len = 1;
    if ((b0 & 0xE0) == 0xC0) {
      len = (i + 1 < text.size() && (bytes[i + 1] & 0xC0) == 0x80) ? 2 : 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = (i + 2 < text.size() && (bytes[i + 1] & 0xC0) == 0x80 &&
             (bytes[i + 2] & 0xC0) == 0x80)
                ? 3
                : 1;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = (i + 3 < text.size() && (bytes[i + 1] & 0xC0) == 0x80 &&
             (bytes[i + 2] & 0xC0) == 0x80 && (bytes[i + 3] & 0xC0) == 0x80)
                ? 4
                : 1;
    }
    ++n;
    i += len;
  }
  return n;
}

}  // namespace epistat::utf8
