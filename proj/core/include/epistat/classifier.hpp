#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "epistat/corpus.hpp"
#include "epistat/lexicon.hpp"
#include "epistat/textnorm.hpp"

namespace epistat {

struct MarkerMatch {
  std::string surface;
  MarkerCategory category;
  std::size_t token_begin = 0;  // token indices, half-open
  std::size_t token_end = 0;
};

struct SuppressedMatch {
  std::string surface;
  std::string rule;
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
};

struct ClassificationResult {
  std::string tweet_id;
  bool is_uncertain = false;  // == !matches.empty()
  std::vector<MarkerMatch> matches;
  std::vector<SuppressedMatch> suppressed;
};

struct ClassifyOptions {
  // Disables context rules so every candidate fires; used to check that
  // suppressed entries would otherwise have matched.
  bool disable_context_rules = false;
};

// Scans normalized tokens for lexicon markers, longest match first at each
// position; tokens consumed by a phrase are not re-matched. Context rules run
// on the surviving candidates. Deterministic.
ClassificationResult classify(const NormalizedText& text, const Lexicon& lexicon,
                              const ClassifyOptions& options = {});

// The interrogative-context predicate for the particle "من": fires when the
// next token is a question mark or when a multi-token who-question phrase of
// the lexicon starts at `index`. Precondition: tokens[index] == "من".
bool who_particle_fires(const std::vector<std::string>& tokens, std::size_t index,
                        const Lexicon& lexicon);

struct LabeledCorpus {
  Corpus corpus;
  std::vector<ClassificationResult> results;  // aligned with corpus.records
  std::size_t n_uncertain = 0;
  double prevalence = 0.0;
};

// Labels every record; per-record independence makes the labels stable under
// corpus reordering.
LabeledCorpus classify_corpus(const Corpus& corpus, const Lexicon& lexicon,
                              const NormalizeOptions& norm_options = {},
                              const ClassifyOptions& options = {});

}  // namespace epistat
