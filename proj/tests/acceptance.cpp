// Acceptance runner: `acceptance` runs every criterion, `acceptance N` one of
// them. Prints one line per criterion. Exit 0 when everything run passed,
// 1 on any failure, 77 when the only criterion requested could not run.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pixeltext/gradcheck.hpp"
#include "pixeltext/interpret.hpp"
#include "pixeltext/model_check.hpp"
#include "pixeltext/synthetic.hpp"

namespace fs = std::filesystem;
using namespace pixeltext;

namespace {

enum class Verdict { Pass, Fail, NotRun };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

Outcome check(bool ok, std::string detail) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(detail)}; }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t worker_threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Real>
Tensor<Real> random_tensor(Shape shape, Rng& rng, double lo, double hi) {
  Tensor<Real> t(std::move(shape));
  for (auto& v : t.data()) v = static_cast<Real>(rng.uniform(lo, hi));
  return t;
}

template <typename TapeT>
auto as(const TapeT&, const Tensor<float>& t) {
  return t.template cast<typename std::remove_cvref_t<TapeT>::value_type>();
}

// --- 1 ---------------------------------------------------------------------

Outcome shape_chain() {
  const auto t0 = std::chrono::steady_clock::now();
  ModelConfig cfg;
  cfg.num_classes = 4;
  Rng rng(1);
  const auto params = init_params<float>(cfg, rng);
  const auto video = document_video<float>(prepare_document({0, "Oil prices climb as supply worries mount."}), cfg);
  const auto u = conv_forward(video, params.conv);
  const auto [pooled, idx] = max_over_time(u.response, cfg.pool);

  bool ok = video.shape() == Shape{80, 20 * 131} && u.response.shape() == Shape{50, 79} &&
            pooled.shape() == Shape{50, 25} && cfg.flatten_length() == 1250;
  ok = ok && params.fc1_w.shape() == Shape{1250, 512} && params.fc2_w.shape() == Shape{512, 100} &&
       params.fc3_w.shape() == Shape{100, 4};
  Tape<float> tape;
  auto vars = bind_params(tape, params, false);
  Rng drop(2);
  const auto logits = forward_batch(tape, vars, std::span<const Tensor<float>>(&video, 1), cfg, false, drop);
  ok = ok && logits.value().shape() == Shape{1, 4};
  const double secs = seconds_since(t0);
  return check(ok && secs < 1.0, fmt("U 50x79, pooled 50x25, flatten 1250, FC 1250->512->100->4 (%.2f s)", secs));
}

// --- 2 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng.below(6), n = 1 + rng.below(3), rows = 1 + rng.below(6), cols = 1 + rng.below(8);
    const std::size_t frames = n + rng.below(8);
    ConvKernelBank<float> bank(k, n, rows, cols);
    for (auto& w : bank.weights.data()) w = static_cast<float>(rng.uniform(-1, 1));
    for (auto& b : bank.bias.data()) b = static_cast<float>(rng.uniform(-1, 1));
    Tensor<float> video({frames, rows * cols});
    for (auto& x : video.data()) x = rng.bernoulli(0.3) ? 1.0f : 0.0f;
    const auto fast = conv_forward(video, bank);
    const auto ref = conv_direct(video, bank);
    for (std::size_t i = 0; i < ref.response.size(); ++i)
      worst = std::max(worst, std::abs(double(fast.response[i]) - double(ref.response[i])));
  }
  const double secs = seconds_since(t0);
  return check(worst < 1e-5 && secs < 10.0, fmt("200 instances, max |diff| %.3g (%.2f s)", worst, secs));
}

// --- 3 ---------------------------------------------------------------------

Outcome gradient_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  const double toy = toy_gradient_check(3, 1e-5).max_rel_error;

  constexpr double h = 1e-3;
  Rng rng(3);
  std::vector<std::pair<std::string, double>> ops;
  auto record = [&](std::string name, auto&& f, const Tensor<float>& x) {
    ops.emplace_back(std::move(name), grad_check<float>(f, x, h).max_rel_error);
  };

  const auto a = random_tensor<float>({4, 5}, rng, 0.5, 1.5);
  const auto b = random_tensor<float>({5, 6}, rng, 0.5, 1.5);
  const auto w46 = random_tensor<float>({4, 6}, rng, 0.5, 1.5);
  record("matmul", [&](auto& t, auto x) { return weighted_sum(matmul(x, t.constant(as(t, b))), as(t, w46)); }, a);

  const auto bias = random_tensor<float>({6}, rng, -1, 1);
  const auto rows = random_tensor<float>({4, 6}, rng, -1, 1);
  record("add_row_bias",
         [&](auto& t, auto x) { return weighted_sum(add_row_bias(t.constant(as(t, rows)), x), as(t, w46)); }, bias);

  // Away from the kink: |x| >= 0.1 while probes move by 1e-3.
  auto signed_tensor = [&](Shape s) {
    auto x = random_tensor<float>(std::move(s), rng, 0.1, 1.0);
    for (auto& v : x.data())
      if (rng.bernoulli(0.5)) v = -v;
    return x;
  };
  record("relu", [&](auto& t, auto x) { return weighted_sum(relu(x), as(t, w46)); }, signed_tensor({4, 6}));

  const auto drop_in = random_tensor<float>({4, 6}, rng, -1, 1);
  record("dropout",
         [&](auto& t, auto x) {
           Rng mask(77);
           return weighted_sum(dropout(x, 0.5, mask, true), as(t, w46));
         },
         drop_in);

  const std::vector<std::size_t> labels{0, 2, 1, 3};
  record("softmax_cross_entropy",
         [&](auto&, auto x) { return softmax_cross_entropy(x, std::span<const std::size_t>(labels)); },
         random_tensor<float>({4, 4}, rng, -2, 2));

  // Distinct values 0.1 apart keep every pooling argmax fixed under the probes.
  Tensor<float> series({3, 13});
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t j = 0; j < 13; ++j) series.at(c, j) = static_cast<float>(0.1 * double((j * 7 + c * 5) % 13) + 0.01 * double(c));
  const auto wp = random_tensor<float>({3, 3}, rng, 0.5, 1.5);
  record("max_over_time", [&](auto& t, auto x) { return weighted_sum(max_over_time(x, PoolConfig{}), as(t, wp)); },
         series);

  Tensor<float> video({5, 12});
  for (auto& v : video.data()) v = rng.bernoulli(0.4) ? 1.0f : 0.0f;
  const auto cw = random_tensor<float>({3, 2, 3, 4}, rng, -0.5, 0.5);
  const auto cb = random_tensor<float>({3}, rng, -0.5, 0.5);
  const auto wu = random_tensor<float>({3, 4}, rng, 0.5, 1.5);
  record("conv (weights)",
         [&](auto& t, auto x) {
           return weighted_sum(conv_forward(t.constant(as(t, video)), x, t.constant(as(t, cb))), as(t, wu));
         },
         cw);
  record("conv (video)",
         [&](auto& t, auto x) {
           return weighted_sum(conv_forward(x, t.constant(as(t, cw)), t.constant(as(t, cb))), as(t, wu));
         },
         video);

  double worst_op = 0.0;
  std::string worst_name;
  for (const auto& [name, err] : ops)
    if (err >= worst_op) worst_op = err, worst_name = name;
  const double secs = seconds_since(t0);
  return check(toy < 1e-4 && worst_op < 1e-3 && secs < 60.0,
               fmt("toy 64-bit %.3g; %zu ops 32-bit worst %.3g (%s) (%.2f s)", toy, ops.size(), worst_op,
                   worst_name.c_str(), secs));
}

// --- 4 ---------------------------------------------------------------------

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + PIXELTEXT_CLI + "\" " + args + " > /dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path root = fs::temp_directory_path() / "pixeltext_acceptance_4";
  fs::remove_all(root);
  fs::create_directories(root);

  std::string source;
  fs::path train_csv;
  if (const char* ag = std::getenv("PIXELTEXT_AG_DIR")) {
    train_csv = fs::path(ag) / "train.csv";
    source = "AG subset";
  } else {
    // Four-class planted corpus of the same size as the AG subset.
    PlantedCorpusConfig pc;
    pc.signatures = {{"alpha", "beta"}, {"gamma", "delta"}, {"kappa", "lambda"}, {"sigma", "omega"}};
    pc.docs_per_class = 2250;
    pc.seed = 4;
    train_csv = root / "planted.csv";
    std::ofstream out(train_csv, std::ios::binary);
    write_csv(out, planted_bigram_corpus(pc));
    source = "synthetic 4-class corpus (PIXELTEXT_AG_DIR unset)";
  }
  const std::string common = "train --train \"" + train_csv.string() +
                             "\" --classes 4 --limit-train 8000 --limit-val 1000 --epochs 20 --threads 1 --seed 11";
  const int first = run_cli(common + " --out \"" + (root / "a").string() + "\"");
  const int second = run_cli(common + " --out \"" + (root / "b").string() + "\"");
  const auto report_a = slurp(root / "a" / "report.jsonl");
  const bool same_report = !report_a.empty() && report_a == slurp(root / "b" / "report.jsonl");
  const auto model_a = slurp(root / "a" / "model.pxgc");
  const bool same_model = !model_a.empty() && model_a == slurp(root / "b" / "model.pxgc");
  fs::remove_all(root);
  const double secs = seconds_since(t0);
  return check(first == 0 && second == 0 && same_report && same_model,
               fmt("%s: exit %d/%d, report %s, checkpoint %s (%.0f s)", source.c_str(), first, second,
                   same_report ? "identical" : "DIFFERENT", same_model ? "identical" : "DIFFERENT", secs));
}

// --- 5 ---------------------------------------------------------------------

Outcome desk_scale() {
  const char* ag = std::getenv("PIXELTEXT_AG_DIR");
  if (!ag) return {Verdict::NotRun, "set PIXELTEXT_AG_DIR to a directory with AG News train.csv and test.csv"};
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path dir(ag);
  const auto pool = sample_documents(load_csv((dir / "train.csv").string(), 4), 9000, derive_seed(5, 1));
  const std::vector<Document> train_docs(pool.begin(), pool.begin() + std::min<std::size_t>(8000, pool.size()));
  const std::vector<Document> val_docs(pool.begin() + std::min<std::size_t>(8000, pool.size()), pool.end());
  const auto test_docs = sample_documents(load_csv((dir / "test.csv").string(), 4), 2000, derive_seed(5, 2));

  ModelConfig cfg;
  cfg.num_classes = 4;
  cfg.seed = 5;
  TrainOptions opts;
  opts.threads = worker_threads();
  const auto out = train(prepare_documents(train_docs), prepare_documents(val_docs), cfg,
                         {"World", "Sports", "Business", "Sci/Tech"}, opts);
  const double acc = evaluate(test_docs, out.checkpoint, opts.threads).accuracy;
  const double minutes = seconds_since(t0) / 60.0;
  return check(acc >= 0.70, fmt("test accuracy %.4f on %zu docs, best epoch %zu, %.1f min", acc, test_docs.size(),
                                out.report.best_epoch, minutes));
}

// --- 6 ---------------------------------------------------------------------

Outcome planted_bigram() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr int kSeeds = 10;
  int successes = 0;
  std::string failures;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    PlantedCorpusConfig pc;
    pc.seed = static_cast<std::uint64_t>(seed);
    const auto train_docs = prepare_documents(planted_bigram_corpus(pc));
    PlantedCorpusConfig vc = pc;
    vc.seed = 1000 + static_cast<std::uint64_t>(seed);
    vc.docs_per_class = 100;
    const auto val_docs = prepare_documents(planted_bigram_corpus(vc));

    ModelConfig cfg;
    cfg.num_classes = 2;
    cfg.seed = static_cast<std::uint64_t>(seed);
    TrainOptions opts;
    opts.threads = worker_threads();
    const auto out = train(train_docs, val_docs, cfg, {"A", "B"}, opts);
    const double acc = evaluate(train_docs, out.checkpoint, opts.threads).accuracy;
    const auto tables = aggregate_class_phrases(train_docs, out.checkpoint, 1, opts.threads);
    bool ranked = true;
    std::string tops;
    for (const auto& t : tables) {
      const auto& [first, second] = pc.signatures[t.label];
      const std::string top = t.phrases.empty() ? "-" : t.phrases.front().phrase;
      ranked = ranked && top == first + "_" + second;
      tops += (tops.empty() ? "" : "/") + top;
    }
    std::printf("  seed %d: train accuracy %.4f, top phrases %s\n", seed, acc, tops.c_str());
    std::fflush(stdout);
    if (acc >= 0.95 && ranked)
      ++successes;
    else
      failures += " " + std::to_string(seed);
  }
  const double minutes = seconds_since(t0) / 60.0;
  return check(successes >= 9 && minutes < 10.0,
               fmt("%d/%d seeds rank the planted bigram first%s%s (%.1f min)", successes, kSeeds,
                   failures.empty() ? "" : "; failed:", failures.c_str(), minutes));
}

// --- 7 ---------------------------------------------------------------------

Outcome confusion_consistency() {
  const auto t0 = std::chrono::steady_clock::now();
  ModelConfig cfg;
  cfg.kernels = 4;
  cfg.fc1 = 16;
  cfg.fc2 = 8;
  cfg.num_classes = 3;
  PlantedCorpusConfig pc;
  pc.signatures = {{"alpha", "beta"}, {"gamma", "delta"}, {"kappa", "lambda"}};
  pc.docs_per_class = 4;
  pc.filler_words = 8;
  pc.vocabulary = 60;
  int mismatches = 0;
  constexpr int kTrials = 20;
  for (int trial = 0; trial < kTrials; ++trial) {
    pc.seed = static_cast<std::uint64_t>(trial);
    auto docs = prepare_documents(planted_bigram_corpus(pc));
    docs.resize(1 + static_cast<std::size_t>(trial) % docs.size());
    Rng rng(static_cast<std::uint64_t>(100 + trial));
    Checkpoint ck{cfg, {"a", "b", "c"}, init_params<float>(cfg, rng)};
    for (auto* t : ck.params.tensors())
      if (t->rank() == 1)
        for (auto& v : t->data()) v = static_cast<float>(rng.uniform(-1, 1));
    const auto result = evaluate(docs, ck);
    const auto cm = confusion_matrix(docs, ck);
    if (double(cm.diagonal()) / double(cm.total()) != result.accuracy || cm.total() != docs.size()) ++mismatches;
  }
  const double secs = seconds_since(t0);
  return check(mismatches == 0 && secs < 1.0,
               fmt("%d/%d runs with diagonal/total == accuracy (%.2f s)", kTrials - mismatches, kTrials, secs));
}

// --- 8 ---------------------------------------------------------------------

Outcome pooling_law() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(8);
  int bad = 0, configs = 0;
  for (; configs < 2000; ++configs) {
    const std::size_t length = 1 + rng.below(120), kernel = 1 + rng.below(6), stride = 1 + rng.below(6),
                      dilation = 1 + rng.below(6);
    const PoolConfig cfg{kernel, stride, dilation};
    const long reach = long(dilation * (kernel - 1)) + 1;
    const std::size_t expect = long(length) < reach ? 0 : (length - std::size_t(reach)) / stride + 1;
    if (pool_output_length(length, cfg) != expect) {
      ++bad;
      continue;
    }
    if (expect == 0) continue;
    // A one-hot channel at position q lands in exactly the windows whose
    // index set {t*s + i*d} contains q.
    for (std::size_t q = 0; q < length; ++q) {
      Tensor<float> u({1, length}, -1.0f);
      u.at(0, q) = 1.0f;
      const auto [pooled, idx] = max_over_time(u, cfg);
      for (std::size_t t = 0; t < expect; ++t) {
        bool reads = false;
        for (std::size_t i = 0; i < kernel; ++i) reads = reads || t * stride + i * dilation == q;
        const bool hit = pooled.at(0, t) == 1.0f;
        if (hit != reads || (hit && idx.at(0, t) != q)) ++bad;
      }
    }
  }
  const double secs = seconds_since(t0);
  return check(bad == 0 && secs < 5.0, fmt("%d random configs, %d violations (%.2f s)", configs, bad, secs));
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"shape chain", shape_chain},
      {"conv oracle equivalence", oracle_equivalence},
      {"gradient correctness", gradient_correctness},
      {"training determinism", determinism},
      {"desk-scale AG accuracy", desk_scale},
      {"planted-bigram interpretability", planted_bigram},
      {"confusion-matrix consistency", confusion_consistency},
      {"pooling law", pooling_law},
  };
  std::vector<std::size_t> selected;
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > int(criteria.size())) {
      std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
      return 2;
    }
    selected.push_back(std::size_t(n - 1));
  } else {
    for (std::size_t i = 0; i < criteria.size(); ++i) selected.push_back(i);
  }

  int failed = 0, not_run = 0;
  for (auto i : selected) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "NOT RUN";
    std::printf("criterion %zu %-32s %s  %s\n", i + 1, criteria[i].first, tag, o.detail.c_str());
    std::fflush(stdout);
    failed += o.verdict == Verdict::Fail;
    not_run += o.verdict == Verdict::NotRun;
  }
  if (failed) return 1;
  if (not_run && selected.size() == 1) return 77;
  return 0;
}
