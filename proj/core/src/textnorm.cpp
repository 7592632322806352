#include "epistat/textnorm.hpp"

#include <algorithm>

#include "epistat/utf8.hpp"

namespace epistat {

namespace {

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kAlefMadda = 0x0622;
constexpr char32_t kAlefHamzaAbove = 0x0623;
constexpr char32_t kAlefHamzaBelow = 0x0625;
constexpr char32_t kAlefMaqsura = 0x0649;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kArabicQuestion = 0x061F;

bool is_arabic_diacritic(char32_t c) { return c >= 0x064B && c <= 0x065F; }

// Canonical composition pairs in the Arabic block (base, combining mark ->
// precomposed). This is the slice of NFC that matters for this pipeline.
char32_t compose_pair(char32_t base, char32_t mark) {
  switch (mark) {
    case 0x0653:  // madda above
      return base == 0x0627 ? 0x0622 : 0;
    case 0x0654:  // hamza above
      switch (base) {
        case 0x0627: return 0x0623;
        case 0x0648: return 0x0624;
        case 0x064A: return 0x0626;
        case 0x06D5: return 0x06C0;
        case 0x06C1: return 0x06C2;
        case 0x06D2: return 0x06D3;
        default: return 0;
      }
    case 0x0655:  // hamza below
      return base == 0x0627 ? 0x0625 : 0;
    default:
      return 0;
  }
}

bool is_whitespace(char32_t c) {
  switch (c) {
    case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
    case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
    case 0x200B: case 0x200C: case 0x200D: case 0x200E: case 0x200F:
    case 0xFEFF:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_separator_punct(char32_t c) {
  if (c < 0x80) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
           (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
  }
  switch (c) {
    case 0x060C:  // Arabic comma
    case 0x061B:  // Arabic semicolon
    case 0x066A: case 0x066B: case 0x066C: case 0x066D:
    case 0x06D4:  // Arabic full stop
    case 0x00AB: case 0x00BB:  // guillemets
    case 0x2018: case 0x2019: case 0x201C: case 0x201D:
    case 0x2013: case 0x2014: case 0x2026:
    case 0x2022: case 0x00B7:
    case 0x2039: case 0x203A:
    case 0x00A1: case 0x00BF:
      return true;
    default:
      return false;
  }
}

bool is_question_mark(char32_t c) { return c == kArabicQuestion || c == '?'; }

bool is_ascii_alnum(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

struct Chr {
  char32_t ch;
  std::size_t byte_begin;
  std::size_t byte_end;
};

bool starts_with(const std::vector<Chr>& chars, std::size_t at, std::string_view ascii) {
  if (at + ascii.size() > chars.size()) return false;
  for (std::size_t k = 0; k < ascii.size(); ++k) {
    if (chars[at + k].ch != static_cast<char32_t>(ascii[k])) return false;
  }
  return true;
}

// URL span: scheme-prefixed run or a bare "t.co/" host at a token boundary,
// extending to the next whitespace.
std::vector<std::pair<std::size_t, std::size_t>> find_url_char_spans(
    const std::vector<Chr>& chars) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t i = 0;
  while (i < chars.size()) {
    bool url_here = starts_with(chars, i, "http://") || starts_with(chars, i, "https://");
    if (!url_here && starts_with(chars, i, "t.co/")) {
      url_here = i == 0 || !is_ascii_alnum(chars[i - 1].ch);
      if (url_here && i + 5 >= chars.size()) url_here = false;  // no path
    }
    if (url_here) {
      std::size_t j = i;
      while (j < chars.size() && !is_whitespace(chars[j].ch)) ++j;
      spans.emplace_back(i, j);
      i = j;
    } else {
      ++i;
    }
  }
  return spans;
}

}  // namespace

NormalizedText normalize(std::string_view raw, const NormalizeOptions& options) {
  std::vector<Chr> chars;
  {
    auto decoded = utf8::decode(raw);
    chars.reserve(decoded.size());
    for (const auto& d : decoded) chars.push_back({d.ch, d.byte_begin, d.byte_end});
  }

  // 1. canonical composition (spans of the pair merge)
  {
    std::vector<Chr> composed;
    composed.reserve(chars.size());
    for (const auto& c : chars) {
      if (!composed.empty()) {
        if (char32_t pre = compose_pair(composed.back().ch, c.ch); pre != 0) {
          composed.back().ch = pre;
          composed.back().byte_end = c.byte_end;
          continue;
        }
      }
      composed.push_back(c);
    }
    chars = std::move(composed);
  }

  NormalizedText out;

  // 2. URL removal
  {
    auto url_spans = find_url_char_spans(chars);
    out.urls_stripped = static_cast<int>(url_spans.size());
    if (!url_spans.empty()) {
      std::vector<Chr> kept;
      kept.reserve(chars.size());
      std::size_t s = 0;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        while (s < url_spans.size() && i >= url_spans[s].second) ++s;
        if (s < url_spans.size() && i >= url_spans[s].first && i < url_spans[s].second) {
          continue;
        }
        kept.push_back(chars[i]);
      }
      chars = std::move(kept);
    }
  }

  // 3-5. character filtering and folding
  {
    std::vector<Chr> kept;
    kept.reserve(chars.size());
    for (Chr c : chars) {
      if (c.ch == kTatweel || is_arabic_diacritic(c.ch)) continue;
      if (options.fold_orthography) {
        if (c.ch == kAlefMadda || c.ch == kAlefHamzaAbove || c.ch == kAlefHamzaBelow) {
          c.ch = kAlef;
        } else if (c.ch == kAlefMaqsura) {
          c.ch = kYeh;
        }
      }
      kept.push_back(c);
    }
    chars = std::move(kept);
  }

  // 6. tokenization
  std::u32string current;
  std::size_t tok_begin = 0, tok_end = 0;
  auto flush = [&] {
    if (!current.empty()) {
      out.tokens.push_back(utf8::encode(current));
      out.token_spans.push_back({tok_begin, tok_end});
      current.clear();
    }
  };
  for (const Chr& c : chars) {
    if (is_question_mark(c.ch)) {
      flush();
      std::string q;
      utf8::append(q, c.ch);
      out.tokens.push_back(std::move(q));
      out.token_spans.push_back({c.byte_begin, c.byte_end});
    } else if (is_whitespace(c.ch) || is_separator_punct(c.ch)) {
      flush();
    } else {
      if (current.empty()) tok_begin = c.byte_begin;
      current.push_back(c.ch);
      tok_end = c.byte_end;
    }
  }
  flush();
  return out;
}

bool contains_url(std::string_view text) {
  auto decoded = utf8::decode(text);
  std::vector<Chr> chars;
  chars.reserve(decoded.size());
  for (const auto& d : decoded) chars.push_back({d.ch, d.byte_begin, d.byte_end});
  return !find_url_char_spans(chars).empty();
}

}  // namespace epistat
