#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "pixeltext/corpus.hpp"

using namespace pixeltext;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("tokenize splits on whitespace and keeps case") {
  CHECK(tokenize("in Iraq") == TokenSequence{"in", "Iraq"});
  CHECK(tokenize("  several\t spaces\n here ") == TokenSequence{"several", "spaces", "here"});
  CHECK(tokenize("").empty());
  CHECK(tokenize(" \t\n").empty());
}

TEST_CASE("tokenize detaches leading and trailing punctuation") {
  CHECK(tokenize("NEW YORK,") == TokenSequence{"NEW", "YORK", ","});
  CHECK(tokenize("(Reuters) -") == TokenSequence{"(", "Reuters", ")", "-"});
  CHECK(tokenize("St. Bears...") == TokenSequence{"St", ".", "Bears", ".", ".", "."});
  CHECK(tokenize("Short-sellers") == TokenSequence{"Short-sellers"});
  CHECK(tokenize("\"quoted\"") == TokenSequence{"\"", "quoted", "\""});
}

TEST_CASE("tokenize drops words longer than 17 characters") {
  CHECK(tokenize("pneumonoultramicroscopicsilicovolcanoconiosis cat") == TokenSequence{"cat"});
  CHECK(tokenize(std::string(17, 'a')).size() == 1);
  CHECK(tokenize(std::string(18, 'a')).empty());
  Catch::SimplePcg32 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    for (int i = 0; i < 40; ++i) {
      const int c = static_cast<int>(rng() % 100);
      text.push_back(c < 15 ? ' ' : c < 25 ? ",.;!?()\"'"[c - 15] : static_cast<char>('a' + c % 26));
    }
    for (const auto& t : tokenize(text)) {
      CHECK(!t.empty());
      CHECK(t.size() <= kMaxWordLength);
    }
  }
}

TEST_CASE("word length histogram counts raw tokens") {
  CHECK(word_length_histogram({Document{0, "a bb a"}}) == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});
  CHECK(word_length_histogram({}).empty());
  const auto h = word_length_histogram({Document{0, std::string(20, 'x') + " ab"}});
  CHECK(h.at(20) == 1);
  CHECK(h.at(2) == 1);
}

TEST_CASE("CSV rows become documents") {
  std::istringstream in("\"3\",\"Wall St. Bears\",\"Short-sellers...\"\n\"1\",\"a \"\"quote\"\"\",\"two\nlines\"\r\n");
  const auto docs = read_csv(in, 4);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0] == Document{2, "Wall St. Bears Short-sellers..."});
  CHECK(docs[1] == Document{0, "a \"quote\" two\nlines"});
}

TEST_CASE("CSV errors") {
  CHECK(kind_of([] {
          std::istringstream in("\"5\",\"x\",\"y\"\n");
          read_csv(in, 4);
        }) == ErrorKind::LabelOutOfRange);
  CHECK(kind_of([] {
          std::istringstream in("\"0\",\"x\"\n");
          read_csv(in, 4);
        }) == ErrorKind::LabelOutOfRange);
  CHECK(kind_of([] {
          std::istringstream in("\"two\",\"x\"\n");
          read_csv(in, 4);
        }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] {
          std::istringstream in("\"1\",\"unterminated\n");
          read_csv(in, 4);
        }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] {
          std::istringstream in("\"1\",\"x\"junk\n");
          read_csv(in, 4);
        }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { load_csv("/nonexistent/file.csv", 4); }) == ErrorKind::IoFailure);
}

TEST_CASE("write_csv round-trips through read_csv") {
  Catch::SimplePcg32 rng(11);
  const std::string alphabet = "ab ,\"\n\r'x.";
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Document> docs;
    const std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) {
      Document d{rng() % 4, {}};
      const std::size_t len = rng() % 30;
      for (std::size_t k = 0; k < len; ++k) d.text.push_back(alphabet[rng() % alphabet.size()]);
      docs.push_back(d);
    }
    std::stringstream io;
    write_csv(io, docs);
    CHECK(read_csv(io, 4) == docs);
  }
}

TEST_CASE("train/validation split") {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < 10; ++i) docs.push_back({i % 4, "doc " + std::to_string(i)});
  auto [train, val] = split_train_validation(docs, 0.8, 42);
  CHECK(train.size() == 8);
  CHECK(val.size() == 2);
  auto again = split_train_validation(docs, 0.8, 42);
  CHECK(again.first == train);
  CHECK(again.second == val);

  std::set<std::string> seen;
  for (const auto& d : train) seen.insert(d.text);
  for (const auto& d : val) seen.insert(d.text);
  CHECK(seen.size() == 10);

  std::vector<Document> big(120000, Document{0, ""});
  auto [t, v] = split_train_validation(big, 0.8, 1);
  CHECK(t.size() == 96000);
  CHECK(v.size() == 24000);

  CHECK(kind_of([&] { split_train_validation(docs, 1.0, 0); }) == ErrorKind::ConfigMismatch);
}

TEST_CASE("text videos are padded and truncated to 80 frames") {
  const auto empty = make_text_video({});
  CHECK(empty.frames.size() == 80);
  CHECK(empty.valid_len == 0);
  for (const auto& f : empty.frames) CHECK(f == blank_frame());

  const auto three = make_text_video({"one", "two", "three"});
  CHECK(three.valid_len == 3);
  CHECK(three.frames[1] == render_word("two"));
  for (std::size_t i = 3; i < 80; ++i) CHECK(ink_fraction(three.frames[i]) == 0.0);

  TokenSequence many;
  for (int i = 0; i < 200; ++i) many.push_back("w" + std::to_string(i));
  const auto cut = make_text_video(many);
  CHECK(cut.frames.size() == 80);
  CHECK(cut.valid_len == 80);
  CHECK(cut.frames[79] == render_word("w79"));
}

TEST_CASE("video tensor flattens frames row-major") {
  const auto video = make_text_video({"ab"});
  const auto t = video_tensor<float>(video);
  REQUIRE(t.shape() == Shape{80, 2620});
  const auto img = render_word("ab");
  for (std::size_t r = 0; r < kImageRows; ++r)
    for (std::size_t c = 0; c < kImageCols; ++c) REQUIRE(t.at(0, r * kImageCols + c) == float(img.at(r, c)));
  for (std::size_t i = 0; i < kImagePixels; ++i) REQUIRE(t.at(1, i) == 0.0f);
}

TEST_CASE("prepared corpus cache round-trips") {
  std::vector<PreparedDoc> docs = {
      prepare_document({2, "Wall St. Bears Claw Back Into the Black (Reuters)"}),
      prepare_document({0, ""}),
  };
  TokenSequence many;
  for (int i = 0; i < 120; ++i) many.push_back("t" + std::to_string(i));
  docs.push_back({1, TokenSequence(many.begin(), many.begin() + 80)});

  std::stringstream io;
  write_prepared_cache(io, docs);
  CHECK(io.str().substr(0, 4) == "PXG1");
  CHECK(read_prepared_cache(io) == docs);

  std::string truncated = io.str();
  truncated.resize(truncated.size() - 3);
  std::istringstream bad(truncated);
  CHECK(kind_of([&] { read_prepared_cache(bad); }) == ErrorKind::CorruptLength);

  std::istringstream wrong("PXGX");
  CHECK(kind_of([&] { read_prepared_cache(wrong); }) == ErrorKind::BadMagic);
}
