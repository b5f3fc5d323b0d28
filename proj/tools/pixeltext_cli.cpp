// pixeltext: render words, prepare corpora, train, evaluate, interpret and
// gradient-check the pixel-embedding text classifier.
//
// Exit codes: 0 ok, 1 usage, 2 data, 3 numeric check failure, 4 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pixeltext/interpret.hpp"
#include "pixeltext/model.hpp"
#include "pixeltext/model_check.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace pixeltext;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
      return kExitUsage;
    case ErrorKind::IoFailure:
    case ErrorKind::BadMagic:
    case ErrorKind::VersionMismatch:
    case ErrorKind::CorruptLength:
      return kExitIo;
    default:
      return kExitData;
  }
}

[[noreturn]] void usage_error(const std::string& msg) { throw Error(ErrorKind::Usage, msg); }

// --- run configuration ------------------------------------------------------

using KeyValues = std::map<std::string, std::string>;

KeyValues default_keys() {
  const ModelConfig m;
  auto num = [](auto v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };
  return {
      {"ngram", num(m.ngram)},
      {"kernels", num(m.kernels)},
      {"sequence_length", num(m.sequence_length)},
      {"pool_kernel", num(m.pool.kernel)},
      {"pool_stride", num(m.pool.stride)},
      {"pool_dilation", num(m.pool.dilation)},
      {"fc1", num(m.fc1)},
      {"fc2", num(m.fc2)},
      {"num_classes", num(m.num_classes)},
      {"dropout", num(m.dropout)},
      {"learning_rate", num(m.learning_rate)},
      {"batch_size", num(m.batch_size)},
      {"max_epochs", num(m.max_epochs)},
      {"patience", num(m.patience)},
      {"seed", num(m.seed)},
      {"threads", "1"},
      {"out", "."},
      {"input", ""},
      {"train_csv", ""},
      {"val_csv", ""},
      {"test_csv", ""},
      {"checkpoint", ""},
      {"label_names", ""},
      {"train_fraction", "0.8"},
      {"limit_train", "0"},
      {"limit_val", "0"},
      {"limit_test", "0"},
      {"per_doc", "1"},
      {"phrase_limit", "50"},
  };
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void apply_pair(KeyValues& kv, const std::string& key, const std::string& value, const std::string& where) {
  if (!kv.contains(key)) usage_error(where + ": unknown key '" + key + "'");
  kv[key] = value;
}

void apply_file(KeyValues& kv, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open config " + path.string());
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    const auto body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) usage_error(path.string() + ":" + std::to_string(n) + ": expected key=value");
    apply_pair(kv, trim(body.substr(0, eq)), trim(body.substr(eq + 1)), path.string() + ":" + std::to_string(n));
  }
}

std::uint64_t parse_uint(const KeyValues& kv, const std::string& key) {
  const auto& s = kv.at(key);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    usage_error(key + "=" + s + " is not a non-negative integer");
  return v;
}

double parse_real(const KeyValues& kv, const std::string& key) {
  const auto& s = kv.at(key);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) usage_error(key + "=" + s + " is not a number");
  return v;
}

struct RunConfig {
  KeyValues keys;
  ModelConfig model;
  std::size_t threads = 1;
  fs::path out;
  std::vector<std::string> label_names;

  const std::string& str(const std::string& k) const { return keys.at(k); }
  std::size_t count(const std::string& k) const { return parse_uint(keys, k); }
  double real(const std::string& k) const { return parse_real(keys, k); }
};

RunConfig resolve(const std::optional<std::string>& config_file, const KeyValues& overrides) {
  RunConfig rc;
  rc.keys = default_keys();
  if (config_file) apply_file(rc.keys, *config_file);
  for (const auto& [k, v] : overrides) apply_pair(rc.keys, k, v, "command line");

  auto& m = rc.model;
  m.ngram = parse_uint(rc.keys, "ngram");
  m.kernels = parse_uint(rc.keys, "kernels");
  m.sequence_length = parse_uint(rc.keys, "sequence_length");
  m.pool = {parse_uint(rc.keys, "pool_kernel"), parse_uint(rc.keys, "pool_stride"),
            parse_uint(rc.keys, "pool_dilation")};
  m.fc1 = parse_uint(rc.keys, "fc1");
  m.fc2 = parse_uint(rc.keys, "fc2");
  m.num_classes = parse_uint(rc.keys, "num_classes");
  m.dropout = parse_real(rc.keys, "dropout");
  m.learning_rate = parse_real(rc.keys, "learning_rate");
  m.batch_size = parse_uint(rc.keys, "batch_size");
  m.max_epochs = parse_uint(rc.keys, "max_epochs");
  m.patience = parse_uint(rc.keys, "patience");
  m.seed = parse_uint(rc.keys, "seed");
  if (m.sequence_length > kSequenceLength)
    usage_error("sequence_length above " + std::to_string(kSequenceLength) + " is not supported");
  m.validate();
  rc.threads = std::max<std::size_t>(1, parse_uint(rc.keys, "threads"));
  rc.out = rc.keys.at("out");
  for (const char* k : {"train_fraction"}) {
    const double f = parse_real(rc.keys, k);
    if (!(f > 0.0 && f < 1.0)) usage_error(std::string(k) + " must lie in (0, 1)");
  }
  for (const char* k : {"limit_train", "limit_val", "limit_test", "per_doc", "phrase_limit"}) parse_uint(rc.keys, k);

  const auto& names = rc.keys.at("label_names");
  if (names.empty()) {
    for (std::size_t c = 1; c <= m.num_classes; ++c) rc.label_names.push_back(std::to_string(c));
  } else {
    std::stringstream ss(names);
    for (std::string part; std::getline(ss, part, ',');) rc.label_names.push_back(trim(part));
    if (rc.label_names.size() != m.num_classes)
      throw Error(ErrorKind::ConfigMismatch, std::to_string(rc.label_names.size()) + " label names for " +
                                                 std::to_string(m.num_classes) + " classes");
  }
  return rc;
}

// --- output ------------------------------------------------------------------

void write_text(const fs::path& path, const std::string& text) {
  write_file_atomically(path, [&](std::ostream& out) { out << text; });
}

void prepare_out_dir(const RunConfig& rc) {
  std::error_code ec;
  fs::create_directories(rc.out, ec);
  if (ec) throw Error(ErrorKind::IoFailure, "cannot create " + rc.out.string() + ": " + ec.message());
  std::string text;
  for (const auto& [k, v] : rc.keys) text += k + "=" + v + "\n";
  write_text(rc.out / "resolved.cfg", text);
}

fs::path checkpoint_path(const RunConfig& rc) {
  const auto& p = rc.str("checkpoint");
  return p.empty() ? rc.out / "model.pxgc" : fs::path(p);
}

// --- data ----------------------------------------------------------------------

constexpr std::uint64_t kDataStream = 0x44415441;  // "DATA"
constexpr std::uint64_t kTestStream = 0x54455354;  // "TEST"

std::vector<Document> load_required(const RunConfig& rc, const std::string& key) {
  const auto& path = rc.str(key);
  if (path.empty()) usage_error(key + " is not set");
  return load_csv(path, rc.model.num_classes);
}

std::vector<Document> limited(std::vector<Document> docs, std::size_t limit, std::uint64_t seed) {
  if (limit == 0 || limit >= docs.size()) return docs;
  return sample_documents(docs, limit, seed);
}

// Train/validation documents. With no validation file the training file is
// split: an explicit limit pair samples that many documents without
// replacement, otherwise a train_fraction split is used.
std::pair<std::vector<Document>, std::vector<Document>> training_data(const RunConfig& rc) {
  const auto seed = derive_seed(rc.model.seed, kDataStream);
  auto docs = load_required(rc, "train_csv");
  const std::size_t n_train = rc.count("limit_train"), n_val = rc.count("limit_val");
  if (!rc.str("val_csv").empty()) {
    auto val = load_required(rc, "val_csv");
    return {limited(std::move(docs), n_train, seed), limited(std::move(val), n_val, derive_seed(seed, 1))};
  }
  if (n_train == 0 && n_val == 0) return split_train_validation(docs, rc.real("train_fraction"), seed);
  if (n_train == 0 || n_val == 0) usage_error("set both limit_train and limit_val, or neither");
  if (n_train + n_val > docs.size())
    throw Error(ErrorKind::EmptySplit, "limits ask for " + std::to_string(n_train + n_val) + " documents, file has " +
                                           std::to_string(docs.size()));
  auto pool = sample_documents(docs, n_train + n_val, seed);
  std::vector<Document> val(pool.begin() + static_cast<std::ptrdiff_t>(n_train), pool.end());
  pool.resize(n_train);
  return {std::move(pool), std::move(val)};
}

std::vector<Document> test_data(const RunConfig& rc) {
  const std::string key = rc.str("test_csv").empty() && !rc.str("input").empty() ? "input" : "test_csv";
  return limited(load_required(rc, key), rc.count("limit_test"), derive_seed(rc.model.seed, kTestStream));
}

Checkpoint load_matching_checkpoint(const RunConfig& rc) {
  auto ck = load_checkpoint(checkpoint_path(rc));
  const auto& a = ck.config;
  const auto& b = rc.model;
  auto mismatch = [](const std::string& what, std::size_t have, std::size_t want) {
    throw Error(ErrorKind::ConfigMismatch, "checkpoint has " + what + "=" + std::to_string(have) +
                                               ", config asks for " + std::to_string(want));
  };
  if (a.num_classes != b.num_classes) mismatch("num_classes", a.num_classes, b.num_classes);
  if (a.ngram != b.ngram) mismatch("ngram", a.ngram, b.ngram);
  if (a.kernels != b.kernels) mismatch("kernels", a.kernels, b.kernels);
  if (a.sequence_length != b.sequence_length) mismatch("sequence_length", a.sequence_length, b.sequence_length);
  if (a.fc1 != b.fc1) mismatch("fc1", a.fc1, b.fc1);
  if (a.fc2 != b.fc2) mismatch("fc2", a.fc2, b.fc2);
  if (!(a.pool.kernel == b.pool.kernel && a.pool.stride == b.pool.stride && a.pool.dilation == b.pool.dilation))
    throw Error(ErrorKind::ConfigMismatch, "checkpoint pooling differs from config");
  return ck;
}

// --- subcommands -----------------------------------------------------------------

int cmd_render(const RunConfig& rc, const std::string& word) {
  const auto img = render_word(word);
  write_file_atomically(rc.out / "render.pgm", [&](std::ostream& out) { write_pgm(out, img); });
  std::printf("ink_fraction %.6f\n", ink_fraction(img));
  std::printf("wrote %s\n", (rc.out / "render.pgm").string().c_str());
  return 0;
}

int cmd_dump_font(const RunConfig& rc) {
  // 16 x 6 sheet: printable ASCII in code order, then the fallback box.
  constexpr std::size_t per_row = 16, sheet_rows = 6;
  const std::size_t width = per_row * kGlyphCols, height = sheet_rows * kGlyphRows;
  std::vector<std::uint8_t> bits(width * height, 0);
  const auto& glyphs = GlyphSet::embedded();
  for (std::size_t i = 0; i < per_row * sheet_rows; ++i) {
    const unsigned char code = static_cast<unsigned char>(GlyphSet::kFirst + i);
    const Glyph& g = code <= GlyphSet::kLast ? glyphs.glyph(code) : glyphs.fallback();
    const std::size_t r0 = (i / per_row) * kGlyphRows, c0 = (i % per_row) * kGlyphCols;
    for (std::size_t r = 0; r < kGlyphRows; ++r)
      for (std::size_t c = 0; c < kGlyphCols; ++c) bits[(r0 + r) * width + c0 + c] = g.ink(r, c);
  }
  write_file_atomically(rc.out / "font.pgm", [&](std::ostream& out) { write_pgm(out, width, height, bits); });
  std::printf("wrote %s\n", (rc.out / "font.pgm").string().c_str());
  return 0;
}

int cmd_prepare(const RunConfig& rc, bool histogram) {
  const std::string key = rc.str("input").empty() ? "train_csv" : "input";
  const auto docs = load_required(rc, key);
  const auto prepared = prepare_documents(docs);
  write_file_atomically(rc.out / "prepared.pxg1",
                        [&](std::ostream& out) { write_prepared_cache(out, prepared); });

  std::vector<std::size_t> per_class(rc.model.num_classes, 0);
  std::size_t raw = 0, dropped = 0, truncated = 0;
  for (const auto& d : docs) {
    ++per_class[d.label];
    for (const auto& t : detail::raw_tokens(d.text)) {
      ++raw;
      dropped += t.size() > kMaxWordLength;
    }
    truncated += tokenize(d.text).size() > kSequenceLength;
  }
  std::printf("documents %zu\n", docs.size());
  for (std::size_t c = 0; c < per_class.size(); ++c)
    std::printf("class %s %zu\n", rc.label_names[c].c_str(), per_class[c]);
  std::printf("tokens %zu dropped %zu (%.6f)\n", raw, dropped, raw ? double(dropped) / double(raw) : 0.0);
  std::printf("truncated_documents %zu\n", truncated);

  if (histogram) {
    std::string csv = "length,count\n";
    for (const auto& [len, n] : word_length_histogram(docs)) csv += std::to_string(len) + "," + std::to_string(n) + "\n";
    write_text(rc.out / "length_histogram.csv", csv);
  }
  return 0;
}

int cmd_train(const RunConfig& rc) {
  auto [train_docs, val_docs] = training_data(rc);
  std::printf("train %zu validation %zu\n", train_docs.size(), val_docs.size());
  std::fflush(stdout);
  TrainOptions options;
  options.threads = rc.threads;
  options.on_epoch = [](const EpochRecord& e) {
    std::printf("epoch %zu train_loss %.6f val_acc %.4f (%.1fs)\n", e.epoch, e.train_loss, e.val_acc, e.seconds);
    std::fflush(stdout);
  };
  const auto outcome = train(prepare_documents(train_docs), prepare_documents(val_docs), rc.model, rc.label_names,
                             options);
  const auto& report = outcome.report;

  save_checkpoint(outcome.checkpoint, rc.out / "model.pxgc");
  // Wall-clock time lives in its own file so the report stays reproducible.
  std::string lines, timing;
  double best_acc = 0.0;
  for (const auto& e : report.epochs) {
    lines += json{{"epoch", e.epoch}, {"train_loss", e.train_loss}, {"val_acc", e.val_acc}}.dump() + "\n";
    timing += json{{"epoch", e.epoch}, {"seconds", e.seconds}}.dump() + "\n";
    if (e.epoch == report.best_epoch) best_acc = e.val_acc;
  }
  lines += json{{"best_epoch", report.best_epoch}, {"best_val_acc", best_acc}, {"epochs_run", report.epochs.size()}}
               .dump() +
           "\n";
  timing += json{{"total_seconds", report.seconds}}.dump() + "\n";
  write_text(rc.out / "report.jsonl", lines);
  write_text(rc.out / "timing.jsonl", timing);
  std::printf("best_epoch %zu val_acc %.4f\n", report.best_epoch, best_acc);
  return 0;
}

int cmd_eval(const RunConfig& rc) {
  const auto ck = load_matching_checkpoint(rc);
  const auto docs = prepare_documents(test_data(rc));
  const auto result = evaluate(docs, ck, rc.threads);
  const auto cm = confusion_matrix(docs, result.predictions, ck.config.num_classes);
  if (double(cm.diagonal()) / double(cm.total()) != result.accuracy) {
    std::fprintf(stderr, "error: confusion diagonal disagrees with accuracy\n");
    return kExitNumeric;
  }
  std::string csv = "true\\predicted";
  for (const auto& n : ck.label_names) csv += "," + n;
  csv += "\n";
  for (std::size_t t = 0; t < cm.classes; ++t) {
    csv += ck.label_names[t];
    for (std::size_t p = 0; p < cm.classes; ++p) csv += "," + std::to_string(cm.at(t, p));
    csv += "\n";
  }
  write_text(rc.out / "confusion.csv", csv);
  write_text(rc.out / "eval.json",
             json{{"accuracy", result.accuracy}, {"correct", cm.diagonal()}, {"documents", cm.total()}}.dump() + "\n");
  std::printf("accuracy %.6f (%zu/%zu)\n", result.accuracy, cm.diagonal(), cm.total());
  return 0;
}

int cmd_interpret(const RunConfig& rc) {
  const auto ck = load_matching_checkpoint(rc);
  const auto docs = prepare_documents(test_data(rc));
  const auto tables = aggregate_class_phrases(docs, ck, rc.count("per_doc"), rc.threads);
  const std::size_t limit = rc.count("phrase_limit");
  std::string lines;
  for (const auto& t : tables) {
    const std::size_t shown = limit == 0 ? t.phrases.size() : std::min(limit, t.phrases.size());
    for (std::size_t r = 0; r < shown; ++r) {
      const auto& s = t.phrases[r];
      lines += json{{"class", ck.label_names[t.label]},
                    {"phrase", s.phrase},
                    {"weight", s.weight},
                    {"count", s.count},
                    {"rank", r + 1}}
                   .dump() +
               "\n";
    }
    std::printf("%s:", ck.label_names[t.label].c_str());
    for (std::size_t r = 0; r < std::min<std::size_t>(5, t.phrases.size()); ++r)
      std::printf(" %s", t.phrases[r].phrase.c_str());
    std::printf("\n");
  }
  write_text(rc.out / "phrases.jsonl", lines);
  return 0;
}

int cmd_gradcheck(const RunConfig& rc, bool toy) {
  GradCheckResult r;
  double threshold = 0.0;
  if (toy) {
    threshold = 1e-4;
    r = toy_gradient_check(rc.model.seed, 1e-5);
    std::printf("toy network, 64-bit, h=1e-5\n");
  } else {
    threshold = 5e-2;
    std::vector<PreparedDoc> docs = {prepare_document({0, "Gold prices edge higher in quiet trade"}),
                                     prepare_document({rc.model.num_classes - 1, "Rain stops play at Lord's"})};
    r = model_gradient_check(rc.model, docs, 1e-2);
    std::printf("configured network, output layer, 32-bit, h=1e-2\n");
  }
  std::printf("max_rel_error %.3e at %zu (analytic %.6e numeric %.6e) threshold %.0e\n", r.max_rel_error,
              r.worst_index, r.analytic, r.numeric, threshold);
  write_text(rc.out / "gradcheck.json",
             json{{"max_rel_error", r.max_rel_error}, {"threshold", threshold}, {"toy", toy}}.dump() + "\n");
  return r.max_rel_error < threshold ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pixel-embedding text classifier"};
  app.require_subcommand(1);

  std::optional<std::string> config_file;
  KeyValues overrides;
  std::vector<std::string> sets;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "key=value configuration file");
    auto key_flag = [&](const std::string& flag, const std::string& key, const std::string& help) {
      sub->add_option_function<std::string>(flag, [&overrides, key](const std::string& v) { overrides[key] = v; },
                                            help);
    };
    key_flag("--seed", "seed", "random seed");
    key_flag("--threads", "threads", "worker threads (1 = reproducible)");
    key_flag("--out", "out", "output directory");
    key_flag("--n", "ngram", "n-gram span of the detectors");
    key_flag("--limit-train", "limit_train", "sample this many training documents");
    key_flag("--limit-val", "limit_val", "sample this many validation documents");
    key_flag("--limit-test", "limit_test", "sample this many test documents");
    key_flag("--train", "train_csv", "training CSV");
    key_flag("--val", "val_csv", "validation CSV");
    key_flag("--test", "test_csv", "test CSV");
    key_flag("--checkpoint", "checkpoint", "checkpoint to read");
    key_flag("--classes", "num_classes", "number of classes");
    key_flag("--epochs", "max_epochs", "maximum epochs");
    sub->add_option("--set", sets, "extra key=value override (repeatable)");
  };

  std::string word;
  auto* render = app.add_subcommand("render", "render one word to render.pgm");
  render->add_option("word", word, "word of at most 17 characters")->required();
  add_common(render);

  auto* dump_font = app.add_subcommand("dump-font", "write the glyph sheet to font.pgm");
  add_common(dump_font);

  bool histogram = false;
  std::string prepare_input;
  auto* prepare = app.add_subcommand("prepare", "tokenize a CSV into prepared.pxg1");
  prepare->add_option("input", prepare_input, "CSV file (or set input / train_csv)");
  prepare->add_flag("--histogram", histogram, "also write length_histogram.csv");
  add_common(prepare);

  auto* train_cmd = app.add_subcommand("train", "train and write model.pxgc, report.jsonl");
  add_common(train_cmd);
  auto* eval_cmd = app.add_subcommand("eval", "accuracy and confusion.csv on test_csv");
  add_common(eval_cmd);
  auto* interpret_cmd = app.add_subcommand("interpret", "class phrase tables to phrases.jsonl");
  add_common(interpret_cmd);

  bool toy = false;
  auto* gradcheck = app.add_subcommand("gradcheck", "finite-difference check of the model gradient");
  gradcheck->add_flag("--toy", toy, "64-bit check of every parameter of a toy network");
  add_common(gradcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) usage_error("--set expects key=value, got '" + s + "'");
      overrides[trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
    }
    if (!prepare_input.empty()) overrides["input"] = prepare_input;
    const auto rc = resolve(config_file, overrides);
    prepare_out_dir(rc);

    if (*render) return cmd_render(rc, word);
    if (*dump_font) return cmd_dump_font(rc);
    if (*prepare) return cmd_prepare(rc, histogram);
    if (*train_cmd) return cmd_train(rc);
    if (*eval_cmd) return cmd_eval(rc);
    if (*interpret_cmd) return cmd_interpret(rc);
    if (*gradcheck) return cmd_gradcheck(rc, toy);
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "error (io): %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
