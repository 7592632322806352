#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epistat/textnorm.hpp"

namespace epistat {

enum class MarkerCategory {
  Modal,
  Hedge,
  Question,
  WhoQuestion,
  InfoUncertainty,
  Rumor,
};

inline constexpr int kMarkerCategoryCount = 6;

std::string_view category_name(MarkerCategory category);
MarkerCategory category_from_name(std::string_view name);  // throws LexiconError

// Context rule ids the classifier knows how to evaluate.
inline constexpr std::string_view kWhoInterrogativeRule = "who-interrogative";

struct Marker {
  std::vector<std::string> tokens;  // normalized, 1..4 tokens
  std::string surface;              // tokens joined with single spaces
  MarkerCategory category;
  std::string context_rule;  // empty = unconditional
};

class Lexicon {
 public:
  // Parses the line-delimited lexicon format:
  //   surface<TAB>category[<TAB>context_rule]
  // '#' starts a comment; a "# version:" comment sets the version string.
  // Surfaces are normalized with `options` at load time.
  static Lexicon parse(std::string_view text, std::string default_version = "unversioned",
                       const NormalizeOptions& options = {});
  static Lexicon load(const std::filesystem::path& path,
                      const NormalizeOptions& options = {});

  // The lexicon compiled into the library (data/uncertainty_lexicon_ar.txt).
  static const Lexicon& embedded_default();

  const std::vector<Marker>& markers() const { return markers_; }
  const std::string& version() const { return version_; }
  std::size_t size() const { return markers_.size(); }

  std::array<int, kMarkerCategoryCount> category_counts() const;

  // Marker indices whose first token equals `first_token`, ordered longest
  // surface first (ties keep file order).
  const std::vector<std::size_t>* candidates_for(const std::string& first_token) const;

  std::size_t max_marker_tokens() const { return max_marker_tokens_; }

 private:
  std::vector<Marker> markers_;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
  std::string version_;
  std::size_t max_marker_tokens_ = 0;

  void build_index();
};

}  // namespace epistat
