#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace epistat {

// Byte range of a token in the raw (pre-normalization) text.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct NormalizedText {
  std::vector<std::string> tokens;
  std::vector<TokenSpan> token_spans;  // non-overlapping, increasing
  int urls_stripped = 0;
};

struct NormalizeOptions {
  // Folds alef variants and alef maqsura so dialectal spellings match the
  // lexicon. Off means only composition, URL/tatweel/diacritic removal and
  // tokenization run.
  bool fold_orthography = true;
};

// Normalization pipeline, applied in order:
//   1. canonical composition of Arabic-block base+mark pairs
//   2. URL removal ("http://", "https://", bare "t.co/" hosts)
//   3. tatweel (U+0640) removal
//   4. Arabic diacritic removal (U+064B..U+065F)
//   5. alef folding (U+0622/0623/0625 -> U+0627), alef maqsura (U+0649 -> U+064A)
//   6. tokenization on whitespace/punctuation; U+061F and '?' become
//      standalone tokens
NormalizedText normalize(std::string_view raw, const NormalizeOptions& options = {});

// True if the text contains a URL under the same pattern normalize() strips.
bool contains_url(std::string_view text);

}  // namespace epistat
