#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pixeltext/binary_io.hpp"
#include "pixeltext/error.hpp"
#include "pixeltext/glyph_raster.hpp"
#include "pixeltext/rng.hpp"
#include "pixeltext/tensor.hpp"

namespace pixeltext {

inline constexpr std::size_t kSequenceLength = 80;

struct Document {
  std::size_t label = 0;
  std::string text;

  friend bool operator==(const Document&, const Document&) = default;
};

using TokenSequence = std::vector<std::string>;

struct DatasetSplit {
  std::vector<Document> train;
  std::vector<Document> validation;
  std::vector<Document> test;
  std::vector<std::string> label_names;
};

/// A document as a stack of word frames, padded with blank frames to a fixed
/// length.
struct TextVideo {
  std::vector<WordImage> frames;
  std::size_t valid_len = 0;
};

namespace detail {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

// Whitespace split with leading/trailing punctuation broken off one character
// at a time. Length filtering is left to the caller.
inline std::vector<std::string> raw_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) {
      std::string_view word = text.substr(i, j - i);
      std::size_t lead = 0;
      while (lead < word.size() && is_punct(word[lead])) ++lead;
      std::size_t trail = word.size();
      while (trail > lead && is_punct(word[trail - 1])) --trail;
      for (std::size_t p = 0; p < lead; ++p) out.emplace_back(1, word[p]);
      if (trail > lead) out.emplace_back(word.substr(lead, trail - lead));
      for (std::size_t p = trail; p < word.size(); ++p) out.emplace_back(1, word[p]);
    }
    i = j;
  }
  return out;
}

}  // namespace detail

/// Case is preserved; tokens longer than 17 characters are dropped.
inline TokenSequence tokenize(std::string_view text) {
  auto raw = detail::raw_tokens(text);
  std::erase_if(raw, [](const std::string& t) { return t.empty() || t.size() > kMaxWordLength; });
  return raw;
}

/// Token length -> count, measured before the length filter.
inline std::map<std::size_t, std::size_t> word_length_histogram(const std::vector<Document>& docs) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& d : docs)
    for (const auto& t : detail::raw_tokens(d.text)) ++hist[t.size()];
  return hist;
}

// --- CSV -------------------------------------------------------------------

namespace detail {

// Reads one CSV record (which may span lines inside quotes). Returns false at
// end of input.
inline bool read_csv_record(std::istream& in, std::vector<std::string>& fields, std::size_t line_no) {
  fields.clear();
  int ch = in.peek();
  if (ch == std::char_traits<char>::eof()) return false;

  std::string field;
  bool quoted = false, in_quotes = false, after_quote = false, any = false;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": " + why);
  };
  while ((ch = in.get()) != std::char_traits<char>::eof()) {
    const char c = static_cast<char>(ch);
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      quoted = after_quote = false;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && in.peek() == '\n') in.get();
      break;
    } else if (c == '"') {
      if (quoted || !field.empty()) throw malformed("stray quote");
      quoted = in_quotes = true;
    } else {
      if (after_quote) throw malformed("text after closing quote");
      field.push_back(c);
    }
  }
  if (in_quotes) throw malformed("unterminated quoted field");
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

inline std::string csv_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

/// Parses `"<class>","<field>",...` rows, class 1-based. The text of a
/// document is its remaining fields joined by single spaces.
inline std::vector<Document> read_csv(std::istream& in, std::size_t num_classes) {
  std::vector<Document> docs;
  std::vector<std::string> fields;
  std::size_t line_no = 0;
  while (detail::read_csv_record(in, fields, ++line_no)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() < 2)
      throw Error(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": expected class and text");
    const std::string& cls = fields[0];
    if (cls.empty() || !std::all_of(cls.begin(), cls.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        cls.size() > 9)
      throw Error(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": class '" + cls + "' is not an integer");
    const std::size_t label = std::stoul(cls);
    if (label < 1 || label > num_classes)
      throw Error(ErrorKind::LabelOutOfRange, "line " + std::to_string(line_no) + ": class " + cls +
                                                  " outside [1, " + std::to_string(num_classes) + "]");
    Document doc{label - 1, {}};
    for (std::size_t f = 1; f < fields.size(); ++f) {
      if (f > 1) doc.text.push_back(' ');
      doc.text += fields[f];
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline std::vector<Document> load_csv(const std::string& path, std::size_t num_classes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open " + path);
  return read_csv(in, num_classes);
}

inline void write_csv(std::ostream& out, const std::vector<Document>& docs) {
  for (const auto& d : docs)
    out << detail::csv_quote(std::to_string(d.label + 1)) << ',' << detail::csv_quote(d.text) << '\n';
}

// --- splits ----------------------------------------------------------------

/// Seeded shuffle, then the first ceil(fraction * N) documents go to train.
inline std::pair<std::vector<Document>, std::vector<Document>> split_train_validation(
    const std::vector<Document>& docs, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw Error(ErrorKind::ConfigMismatch, "split fraction must lie in (0, 1)");
  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  const auto n_train =
      std::min(docs.size(), static_cast<std::size_t>(std::ceil(fraction * double(docs.size()) - 1e-9)));
  std::pair<std::vector<Document>, std::vector<Document>> out;
  out.first.reserve(n_train);
  out.second.reserve(docs.size() - n_train);
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < n_train ? out.first : out.second).push_back(docs[order[i]]);
  return out;
}

/// Seeded sample of `count` documents without replacement (all of them when
/// count >= size), in shuffled order.
inline std::vector<Document> sample_documents(const std::vector<Document>& docs, std::size_t count,
                                              std::uint64_t seed) {
  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  order.resize(std::min(count, order.size()));
  std::vector<Document> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(docs[i]);
  return out;
}

// --- text videos -----------------------------------------------------------

inline TextVideo make_text_video(const TokenSequence& tokens, const GlyphSet& glyphs = GlyphSet::embedded(),
                                 std::size_t length = kSequenceLength) {
  TextVideo video;
  video.valid_len = std::min(tokens.size(), length);
  video.frames.reserve(length);
  for (std::size_t i = 0; i < video.valid_len; ++i) video.frames.push_back(render_word(tokens[i], glyphs));
  video.frames.resize(length, blank_frame());
  return video;
}

/// Frames flattened into the rows of a [L x 2620] tensor.
template <typename Real>
Tensor<Real> video_tensor(const TextVideo& video) {
  Tensor<Real> out({video.frames.size(), kImagePixels});
  auto dst = out.data().begin();
  for (const auto& f : video.frames)
    dst = std::transform(f.pixels().begin(), f.pixels().end(), dst,
                         [](std::uint8_t p) { return static_cast<Real>(p); });
  return out;
}

// --- prepared-corpus cache ---------------------------------------------------
//
// "PXG1" followed by records [u32 label][u32 valid_len][80 x (u32 len, bytes)],
// little-endian. Padding slots hold empty strings.

struct PreparedDoc {
  std::size_t label = 0;
  TokenSequence tokens;  // at most kSequenceLength

  friend bool operator==(const PreparedDoc&, const PreparedDoc&) = default;
};

inline PreparedDoc prepare_document(const Document& doc) {
  PreparedDoc p{doc.label, tokenize(doc.text)};
  if (p.tokens.size() > kSequenceLength) p.tokens.resize(kSequenceLength);
  return p;
}

inline void write_prepared_cache(std::ostream& out, const std::vector<PreparedDoc>& docs) {
  out.write("PXG1", 4);
  for (const auto& d : docs) {
    io::write_u32(out, static_cast<std::uint32_t>(d.label));
    io::write_u32(out, static_cast<std::uint32_t>(std::min(d.tokens.size(), kSequenceLength)));
    for (std::size_t i = 0; i < kSequenceLength; ++i)
      io::write_string(out, i < d.tokens.size() ? std::string_view(d.tokens[i]) : std::string_view{});
  }
  if (!out) throw Error(ErrorKind::IoFailure, "write failed for prepared corpus");
}

inline std::vector<PreparedDoc> read_prepared_cache(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() != 4) throw Error(ErrorKind::CorruptLength, "prepared corpus shorter than its magic");
  if (std::string_view(magic, 4) != "PXG1") throw Error(ErrorKind::BadMagic, "not a PXG1 prepared corpus");
  std::vector<PreparedDoc> docs;
  while (in.peek() != std::char_traits<char>::eof()) {
    PreparedDoc d;
    d.label = io::read_u32(in);
    const std::size_t valid = io::read_u32(in);
    if (valid > kSequenceLength) throw Error(ErrorKind::CorruptLength, "valid_len exceeds sequence length");
    for (std::size_t i = 0; i < kSequenceLength; ++i) {
      auto s = io::read_string(in, kMaxWordLength);
      if (i < valid) d.tokens.push_back(std::move(s));
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace pixeltext
