#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pixeltext/corpus.hpp"
#include "pixeltext/rng.hpp"

namespace pixeltext {

/// Synthetic corpus in which each class carries one signature bigram placed
/// at a random position among random filler words.
struct PlantedCorpusConfig {
  std::vector<std::pair<std::string, std::string>> signatures = {{"alpha", "beta"}, {"gamma", "delta"}};
  std::size_t docs_per_class = 500;
  std::size_t filler_words = 30;
  std::size_t vocabulary = 2000;
  std::uint64_t seed = 1;
};

/// Lower-case pseudo-words of 3 to 9 letters, none equal to a signature word.
inline std::vector<std::string> filler_vocabulary(const PlantedCorpusConfig& cfg, Rng& rng) {
  std::set<std::string> reserved;
  for (const auto& [a, b] : cfg.signatures) reserved.insert({a, b});
  std::set<std::string> seen;
  std::vector<std::string> words;
  while (words.size() < cfg.vocabulary) {
    std::string w(3 + rng.below(7), 'a');
    for (auto& c : w) c = static_cast<char>('a' + rng.below(26));
    if (reserved.contains(w) || !seen.insert(w).second) continue;
    words.push_back(std::move(w));
  }
  return words;
}

/// Documents alternate between classes; class c is labelled c.
inline std::vector<Document> planted_bigram_corpus(const PlantedCorpusConfig& cfg) {
  Rng rng(cfg.seed);
  const auto vocab = filler_vocabulary(cfg, rng);
  std::vector<Document> docs;
  docs.reserve(cfg.docs_per_class * cfg.signatures.size());
  for (std::size_t i = 0; i < cfg.docs_per_class; ++i)
    for (std::size_t c = 0; c < cfg.signatures.size(); ++c) {
      std::vector<std::string> words;
      for (std::size_t w = 0; w < cfg.filler_words; ++w) words.push_back(vocab[rng.below(vocab.size())]);
      const auto at = static_cast<std::ptrdiff_t>(rng.below(cfg.filler_words + 1));
      words.insert(words.begin() + at, {cfg.signatures[c].first, cfg.signatures[c].second});
      std::string text;
      for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
      docs.push_back({c, std::move(text)});
    }
  return docs;
}

}  // namespace pixeltext
