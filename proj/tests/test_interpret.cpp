#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "pixeltext/interpret.hpp"
#include "pixeltext/synthetic.hpp"

using namespace pixeltext;

namespace {

Checkpoint random_checkpoint(std::uint64_t seed, std::size_t classes = 4) {
  ModelConfig cfg;
  cfg.num_classes = classes;
  cfg.seed = seed;
  Rng rng(seed);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes; ++c) names.push_back("c" + std::to_string(c));
  return Checkpoint{cfg, names, init_params<float>(cfg, rng)};
}

// Kernel 0 becomes a +1/-1 matched filter for the rendered bigram, so its
// response 2|T & X| - |X| peaks only where the frames equal the template.
void plant_template(Checkpoint& ck, const std::string& first, const std::string& second) {
  auto& w = ck.params.conv.weights;
  const std::size_t frame = kImagePixels;
  const WordImage parts[2] = {render_word(first), render_word(second)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t p = 0; p < frame; ++p) w[i * frame + p] = parts[i].pixels()[p] ? 1.0f : -1.0f;
  ck.params.conv.bias[0] = 0.0f;
}

PreparedDoc doc(std::size_t label, const std::string& text) { return prepare_document(Document{label, text}); }

}  // namespace

TEST_CASE("feature map") {
  auto ck = random_checkpoint(1);
  const auto video = make_text_video(tokenize("A quiet morning in the markets"));
  const auto map = extract_feature_map(video, ck);
  CHECK(map.kernels() == 50);
  CHECK(map.positions() == 79);
  const auto ref = conv_direct(video_tensor<float>(video), ck.params.conv);
  for (std::size_t i = 0; i < map.response.size(); ++i)
    CHECK(map.response[i] == Catch::Approx(ref.response[i]).margin(1e-4));

  for (auto& b : ck.params.conv.bias.data()) b = 0.0f;
  const auto blank = extract_feature_map(make_text_video({}), ck);
  for (auto v : blank.response.data()) CHECK(v == 0.0f);

  ModelConfig short_cfg = ck.config;
  short_cfg.sequence_length = 40;
  ck.config = short_cfg;
  CHECK_THROWS_AS(extract_feature_map(video, ck), Error);
}

TEST_CASE("top n-grams") {
  auto ck = random_checkpoint(2);
  SECTION("two words give one candidate") {
    const TokenSequence tokens = {"hello", "world"};
    const auto hits = top_ngrams(make_text_video(tokens), tokens, ck, 5);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].phrase == "hello_world");
    CHECK(hits[0].position == 0);
  }
  SECTION("a planted template ranks first") {
    plant_template(ck, "not", "great");
    const auto p = doc(0, "the food was not great but the service was fine");
    const auto hits = top_ngrams(p, ck, 3);
    REQUIRE(!hits.empty());
    CHECK(hits[0].phrase == "not_great");
    CHECK(hits[0].kernel == 0);
    CHECK(hits[0].position == 3);
    const auto tmpl = render_word("not").ink_count() + render_word("great").ink_count();
    CHECK(hits[0].response == Catch::Approx(double(tmpl)).margin(1e-3));
  }
  SECTION("padding is never part of a phrase") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      TokenSequence tokens;
      const std::size_t len = 2 + rng.below(12);
      for (std::size_t i = 0; i < len; ++i) tokens.push_back("w" + std::to_string(rng.below(1000)));
      const auto hits = top_ngrams(make_text_video(tokens), tokens, ck, 100);
      CHECK(hits.size() == len - 1);
      for (const auto& h : hits) CHECK(h.position + 2 <= len);
      for (std::size_t i = 1; i < hits.size(); ++i) CHECK(hits[i - 1].response >= hits[i].response);
    }
  }
  SECTION("errors") {
    const TokenSequence one = {"solo"};
    try {
      top_ngrams(make_text_video(one), one, ck, 1);
      FAIL("expected TooShort");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooShort);
    }
    const TokenSequence two = {"a", "b"};
    CHECK_THROWS_AS(top_ngrams(make_text_video(two), two, ck, 0), Error);
  }
}

TEST_CASE("ties prefer earlier positions, then lower kernels") {
  FeatureMap<float> map{Tensor<float>({2, 4}, 1.0f)};
  map.response.at(1, 2) = 3.0f;
  map.response.at(0, 2) = 3.0f;
  const TokenSequence tokens = {"a", "b", "c", "d", "e"};
  const auto hits = top_ngrams(map, tokens, 5, 2, 4);
  REQUIRE(hits.size() == 4);
  CHECK(hits[0].position == 2);
  CHECK(hits[0].kernel == 0);
  for (std::size_t i = 1; i < 4; ++i) CHECK(hits[i].position == (i == 1 ? 0 : i == 2 ? 1 : 3));
}

TEST_CASE("kernel scaling keeps each row's argmax") {
  auto ck = random_checkpoint(4);
  const auto video = make_text_video(tokenize("Rates fall as the central bank cuts again today"));
  const auto before = extract_feature_map(video, ck);
  Rng rng(5);
  std::vector<float> scale(50);
  for (auto& s : scale) s = float(rng.uniform(0.1, 10.0));
  auto& w = ck.params.conv.weights;
  const std::size_t per_kernel = w.size() / 50;
  for (std::size_t i = 0; i < 50; ++i) {
    for (std::size_t p = 0; p < per_kernel; ++p) w[i * per_kernel + p] *= scale[i];
    ck.params.conv.bias[i] *= scale[i];
  }
  const auto after = extract_feature_map(video, ck);
  for (std::size_t i = 0; i < 50; ++i) {
    std::size_t a = 0, b = 0;
    for (std::size_t j = 1; j < 79; ++j) {
      if (before.at(i, j) > before.at(i, a)) a = j;
      if (after.at(i, j) > after.at(i, b)) b = j;
    }
    CHECK(a == b);
  }
}

TEST_CASE("class phrase aggregation") {
  const auto ck = random_checkpoint(6, 2);
  std::vector<PreparedDoc> docs = {doc(0, "stocks rise on strong earnings"), doc(1, "team wins the final"),
                                   doc(0, "oil"), doc(1, "rain delays play"), doc(0, "bank cuts rates")};
  const std::size_t per_doc = 3;
  const auto tables = aggregate_class_phrases(docs, ck, per_doc, 2);
  REQUIRE(tables.size() == 2);
  std::vector<std::size_t> expect(2, 0);
  for (const auto& d : docs)
    if (d.tokens.size() >= 2) expect[d.label] += std::min(per_doc, d.tokens.size() - 1);
  for (const auto& t : tables) {
    std::size_t n = 0;
    for (const auto& s : t.phrases) {
      n += s.count;
      CHECK(s.weight >= 0.0);
      CHECK(s.count >= 1);
    }
    CHECK(n == expect[t.label]);
    for (std::size_t i = 1; i < t.phrases.size(); ++i) CHECK(t.phrases[i - 1].weight >= t.phrases[i].weight);
  }
  CHECK(aggregate_class_phrases(docs, ck, per_doc, 1)[0].phrases.size() == tables[0].phrases.size());

  // One document: its table is its own top hits.
  const std::vector<PreparedDoc> single = {doc(1, "the cat sat on the mat")};
  const auto one = aggregate_class_phrases(single, ck, 4);
  const auto hits = top_ngrams(single[0], ck, 4);
  std::map<std::string, std::pair<double, std::size_t>> expect_map;
  for (const auto& h : hits) {
    expect_map[h.phrase].first += std::max(0.0, double(h.response));
    expect_map[h.phrase].second += 1;
  }
  CHECK(one[0].phrases.empty());
  REQUIRE(one[1].phrases.size() == expect_map.size());
  for (const auto& s : one[1].phrases) {
    CHECK(s.weight == Catch::Approx(expect_map.at(s.phrase).first));
    CHECK(s.count == expect_map.at(s.phrase).second);
  }
}

TEST_CASE("confusion matrix") {
  std::vector<PreparedDoc> docs = {doc(0, "a b"), doc(1, "c d"), doc(1, "e"), doc(2, "f g h")};
  const std::vector<std::size_t> truth = {0, 1, 1, 2};
  const auto perfect = confusion_matrix(docs, truth, 3);
  CHECK(perfect.diagonal() == perfect.total());
  CHECK(perfect.at(1, 1) == 2);

  ModelConfig cfg;
  cfg.num_classes = 3;
  Checkpoint zero{cfg, {"x", "y", "z"}, ModelParams<float>::zeros(cfg)};
  const auto cm = confusion_matrix(docs, zero);
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t p = 1; p < 3; ++p) CHECK(cm.at(t, p) == 0);
  CHECK(cm.at(0, 0) == 1);
  CHECK(cm.at(1, 0) == 2);
  CHECK(cm.at(2, 0) == 1);
  CHECK(cm.total() == docs.size());

  docs.push_back(doc(3, "bad"));
  try {
    confusion_matrix(docs, zero);
    FAIL("expected LabelOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LabelOutOfRange);
  }
}

TEST_CASE("confusion diagonal matches evaluated accuracy") {
  Rng rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    auto ck = random_checkpoint(100 + trial, 3);
    std::vector<PreparedDoc> docs;
    const std::size_t n = 1 + rng.below(12);
    for (std::size_t i = 0; i < n; ++i) {
      std::string text;
      for (std::size_t w = 0, len = 1 + rng.below(6); w < len; ++w) text += "t" + std::to_string(rng.below(50)) + " ";
      docs.push_back(doc(rng.below(3), text));
    }
    const auto r = evaluate(docs, ck);
    const auto cm = confusion_matrix(docs, r.predictions, 3);
    CHECK(double(cm.diagonal()) / double(cm.total()) == r.accuracy);
    std::vector<std::size_t> per_class(3, 0);
    for (const auto& d : docs) ++per_class[d.label];
    for (std::size_t t = 0; t < 3; ++t) {
      std::size_t row = 0;
      for (std::size_t p = 0; p < 3; ++p) row += cm.at(t, p);
      CHECK(row == per_class[t]);
    }
  }
}

TEST_CASE("planted bigram corpus") {
  PlantedCorpusConfig pc;
  pc.docs_per_class = 40;
  pc.seed = 9;
  const auto docs = planted_bigram_corpus(pc);
  REQUIRE(docs.size() == 80);
  CHECK(docs == planted_bigram_corpus(pc));
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto tokens = tokenize(docs[i].text);
    CHECK(docs[i].label == i % 2);
    REQUIRE(tokens.size() == 32);
    const auto& [first, second] = pc.signatures[docs[i].label];
    std::size_t hits = 0;
    for (std::size_t j = 0; j + 1 < tokens.size(); ++j) hits += tokens[j] == first && tokens[j + 1] == second;
    CHECK(hits == 1);
    for (const auto& [a, b] : pc.signatures)
      if (a != first) CHECK(docs[i].text.find(a) == std::string::npos);
  }
}
