#include "epistat/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "epistat/errors.hpp"

namespace epistat {

namespace lexicon_data {
extern const char* kDefaultLexiconText;  // generated from data/uncertainty_lexicon_ar.txt
}

std::string_view category_name(MarkerCategory category) {
  switch (category) {
    case MarkerCategory::Modal: return "modal";
    case MarkerCategory::Hedge: return "hedge";
    case MarkerCategory::Question: return "question";
    case MarkerCategory::WhoQuestion: return "who_question";
    case MarkerCategory::InfoUncertainty: return "info_uncertainty";
    case MarkerCategory::Rumor: return "rumor";
  }
  return "unknown";
}

MarkerCategory category_from_name(std::string_view name) {
  if (name == "modal") return MarkerCategory::Modal;
  if (name == "hedge") return MarkerCategory::Hedge;
  if (name == "question") return MarkerCategory::Question;
  if (name == "who_question") return MarkerCategory::WhoQuestion;
  if (name == "info_uncertainty") return MarkerCategory::InfoUncertainty;
  if (name == "rumor") return MarkerCategory::Rumor;
  throw LexiconError("unknown marker category: '" + std::string(name) + "'");
}

namespace {

constexpr std::string_view kKnownRules[] = {kWhoInterrogativeRule};

bool is_known_rule(std::string_view rule) {
  return std::find(std::begin(kKnownRules), std::end(kKnownRules), rule) !=
         std::end(kKnownRules);
}

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text, std::string default_version,
                       const NormalizeOptions& options) {
  Lexicon lex;
  lex.version_ = std::move(default_version);

  std::set<std::pair<int, std::string>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = strip(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      if (trimmed.rfind("# version:", 0) == 0) {
        lex.version_ = strip(trimmed.substr(10));
      }
      continue;
    }

    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
      std::size_t tab = trimmed.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(strip(trimmed.substr(pos)));
        break;
      }
      fields.push_back(strip(trimmed.substr(pos, tab - pos)));
      pos = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": expected 'surface<TAB>category[<TAB>context_rule]'");
    }

    Marker marker;
    marker.category = category_from_name(fields[1]);
    marker.context_rule = fields.size() == 3 ? fields[2] : "";
    if (!marker.context_rule.empty() && !is_known_rule(marker.context_rule)) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": unknown context rule '" + marker.context_rule + "'");
    }

    NormalizedText norm = normalize(fields[0], options);
    if (norm.tokens.empty()) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": surface '" + fields[0] + "' normalizes to nothing");
    }
    if (norm.tokens.size() > 4) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": surface '" + fields[0] + "' exceeds 4 tokens");
    }
    marker.tokens = std::move(norm.tokens);
    marker.surface = join_tokens(marker.tokens);

    auto key = std::make_pair(static_cast<int>(marker.category), marker.surface);
    if (!seen.insert(key).second) {
      throw LexiconError("duplicate marker: ('" + marker.surface + "', " +
                         std::string(category_name(marker.category)) + ")");
    }
    lex.markers_.push_back(std::move(marker));
  }

  lex.build_index();
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path, const NormalizeOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open lexicon file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.filename().string(), options);
}

const Lexicon& Lexicon::embedded_default() {
  static const Lexicon lex = parse(lexicon_data::kDefaultLexiconText, "builtin");
  return lex;
}

std::array<int, kMarkerCategoryCount> Lexicon::category_counts() const {
  std::array<int, kMarkerCategoryCount> counts{};
  for (const Marker& m : markers_) counts[static_cast<int>(m.category)]++;
  return counts;
}

const std::vector<std::size_t>* Lexicon::candidates_for(const std::string& first_token) const {
  auto it = index_.find(first_token);
  return it == index_.end() ? nullptr : &it->second;
}

void Lexicon::build_index() {
  index_.clear();
  max_marker_tokens_ = 0;
  for (std::size_t i = 0; i < markers_.size(); ++i) {
    index_[markers_[i].tokens.front()].push_back(i);
    max_marker_tokens_ = std::max(max_marker_tokens_, markers_[i].tokens.size());
  }
  for (auto& [token, ids] : index_) {
    std::stable_sort(ids.begin(), ids.end(), [this](std::size_t a, std::size_t b) {
      return markers_[a].tokens.size() > markers_[b].tokens.size();
    });
  }
}

}  // namespace epistat
