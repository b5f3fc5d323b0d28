#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pixeltext/corpus.hpp"
#include "pixeltext/error.hpp"
#include "pixeltext/model.hpp"
#include "pixeltext/ngram_conv.hpp"
#include "pixeltext/parallel.hpp"

namespace pixeltext {

struct NgramHit {
  std::string phrase;  // tokens joined with '_'
  std::size_t kernel = 0;
  std::size_t position = 0;
  float response = 0.0f;
};

struct PhraseStat {
  std::string phrase;
  double weight = 0.0;  // sum of clamped winning responses
  std::size_t count = 0;
};

struct ClassPhraseTable {
  std::size_t label = 0;
  std::vector<PhraseStat> phrases;  // weight descending
};

struct ConfusionMatrix {
  std::size_t classes = 0;
  std::vector<std::size_t> counts;  // row = true class, column = predicted

  explicit ConfusionMatrix(std::size_t c = 0) : classes(c), counts(c * c, 0) {}

  std::size_t at(std::size_t truth, std::size_t predicted) const { return counts[truth * classes + predicted]; }
  std::size_t total() const {
    std::size_t n = 0;
    for (auto v : counts) n += v;
    return n;
  }
  std::size_t diagonal() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < classes; ++c) n += at(c, c);
    return n;
  }
};

/// First-layer response U only: no pooling, no ReLU.
inline FeatureMap<float> extract_feature_map(const Tensor<float>& video, const Checkpoint& ck) {
  detail::check_video_shape(video.shape(), ck.config);
  return conv_forward(video, ck.params.conv);
}

inline FeatureMap<float> extract_feature_map(const TextVideo& video, const Checkpoint& ck) {
  return extract_feature_map(video_tensor<float>(video), ck);
}

/// Ranks n-gram positions inside the real (non-padding) frames by their
/// strongest kernel response. Each position appears at most once, with its
/// best kernel; ties prefer the earlier position, then the lower kernel.
inline std::vector<NgramHit> top_ngrams(const FeatureMap<float>& map, const TokenSequence& tokens,
                                        std::size_t valid_len, std::size_t ngram, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::ConfigMismatch, "top_ngrams needs m >= 1");
  valid_len = std::min(valid_len, tokens.size());
  if (valid_len < ngram)
    throw Error(ErrorKind::TooShort, std::to_string(valid_len) + " words cannot hold a " + std::to_string(ngram) +
                                         "-gram");
  const std::size_t positions = std::min(valid_len - ngram + 1, map.positions());
  std::vector<NgramHit> hits;
  hits.reserve(positions);
  for (std::size_t j = 0; j < positions; ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < map.kernels(); ++i)
      if (map.at(i, j) > map.at(best, j)) best = i;
    NgramHit h;
    h.kernel = best;
    h.position = j;
    h.response = map.at(best, j);
    for (std::size_t w = 0; w < ngram; ++w) h.phrase += (w ? "_" : "") + tokens[j + w];
    hits.push_back(std::move(h));
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const NgramHit& a, const NgramHit& b) { return a.response > b.response; });
  if (hits.size() > m) hits.resize(m);
  return hits;
}

inline std::vector<NgramHit> top_ngrams(const TextVideo& video, const TokenSequence& tokens, const Checkpoint& ck,
                                        std::size_t m) {
  return top_ngrams(extract_feature_map(video, ck), tokens, video.valid_len, ck.config.ngram, m);
}

inline std::vector<NgramHit> top_ngrams(const PreparedDoc& doc, const Checkpoint& ck, std::size_t m) {
  auto video = make_text_video(doc.tokens, GlyphSet::embedded(), ck.config.sequence_length);
  return top_ngrams(video, doc.tokens, ck, m);
}

/// Per true class: for every document long enough to hold an n-gram, its top
/// `per_doc` hits add max(response, 0) to the phrase weight and one to the
/// count. Tables are ordered by weight, then count, then phrase.
inline std::vector<ClassPhraseTable> aggregate_class_phrases(const std::vector<PreparedDoc>& docs,
                                                             const Checkpoint& ck, std::size_t per_doc,
                                                             std::size_t threads = 1) {
  if (per_doc == 0) throw Error(ErrorKind::ConfigMismatch, "per_doc must be >= 1");
  const std::size_t classes = ck.config.num_classes;
  for (const auto& d : docs)
    if (d.label >= classes) throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(d.label));

  std::vector<std::vector<NgramHit>> per_document(docs.size());
  parallel_chunks(docs.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      if (docs[i].tokens.size() >= ck.config.ngram) per_document[i] = top_ngrams(docs[i], ck, per_doc);
  });

  std::vector<std::map<std::string, PhraseStat>> tables(classes);
  for (std::size_t i = 0; i < docs.size(); ++i)
    for (const auto& h : per_document[i]) {
      auto& stat = tables[docs[i].label][h.phrase];
      stat.phrase = h.phrase;
      stat.weight += std::max(0.0, double(h.response));
      stat.count += 1;
    }

  std::vector<ClassPhraseTable> out(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    out[c].label = c;
    for (auto& [_, stat] : tables[c]) out[c].phrases.push_back(std::move(stat));
    std::stable_sort(out[c].phrases.begin(), out[c].phrases.end(), [](const PhraseStat& a, const PhraseStat& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.count > b.count;
    });
  }
  return out;
}

inline ConfusionMatrix confusion_matrix(const std::vector<PreparedDoc>& docs,
                                        const std::vector<std::size_t>& predictions, std::size_t classes) {
  ConfusionMatrix cm(classes);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].label >= classes || predictions.at(i) >= classes)
      throw Error(ErrorKind::LabelOutOfRange, "label outside " + std::to_string(classes) + " classes");
    ++cm.counts[docs[i].label * classes + predictions[i]];
  }
  return cm;
}

/// Uses evaluate()'s prediction rule.
inline ConfusionMatrix confusion_matrix(const std::vector<PreparedDoc>& docs, const Checkpoint& ck,
                                        std::size_t threads = 1) {
  for (const auto& d : docs)
    if (d.label >= ck.config.num_classes)
      throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(d.label) + " with " +
                                                  std::to_string(ck.config.num_classes) + " classes");
  if (docs.empty()) return ConfusionMatrix(ck.config.num_classes);
  return confusion_matrix(docs, evaluate(docs, ck, threads).predictions, ck.config.num_classes);
}

}  // namespace pixeltext
