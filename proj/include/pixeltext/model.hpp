#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pixeltext/autodiff.hpp"
#include "pixeltext/binary_io.hpp"
#include "pixeltext/corpus.hpp"
#include "pixeltext/error.hpp"
#include "pixeltext/glyph_raster.hpp"
#include "pixeltext/ngram_conv.hpp"
#include "pixeltext/optim.hpp"
#include "pixeltext/parallel.hpp"
#include "pixeltext/rng.hpp"

namespace pixeltext {

struct ModelConfig {
  std::size_t ngram = 2;
  std::size_t kernels = 50;
  std::size_t sequence_length = kSequenceLength;
  std::size_t image_rows = kImageRows;
  std::size_t image_cols = kImageCols;
  PoolConfig pool{};
  std::size_t fc1 = 512;
  std::size_t fc2 = 100;
  std::size_t num_classes = 4;
  double dropout = 0.5;
  double learning_rate = 1e-4;
  std::size_t batch_size = 64;
  std::size_t max_epochs = 20;
  std::size_t patience = 3;
  std::uint64_t seed = 1;

  std::size_t frame_size() const { return image_rows * image_cols; }
  std::size_t conv_length() const { return sequence_length >= ngram ? sequence_length - ngram + 1 : 0; }
  std::size_t pooled_length() const { return pool_output_length(conv_length(), pool); }
  std::size_t flatten_length() const { return kernels * pooled_length(); }

  void validate() const {
    auto fail = [](const std::string& why) { throw Error(ErrorKind::ConfigMismatch, why); };
    if (ngram == 0 || kernels == 0 || image_rows == 0 || image_cols == 0) fail("zero-sized layer");
    if (sequence_length < ngram) fail("sequence shorter than the n-gram span");
    if (pooled_length() == 0) fail("pooling window does not fit the feature map");
    if (fc1 == 0 || fc2 == 0 || num_classes < 2) fail("fully connected sizes must be positive, classes >= 2");
    if (!(dropout >= 0.0 && dropout < 1.0)) fail("dropout must lie in [0, 1)");
    if (!(learning_rate > 0.0)) fail("learning rate must be positive");
    if (batch_size == 0) fail("batch size must be positive");
  }

  bool renders_words() const { return image_rows == kImageRows && image_cols == kImageCols; }

  friend bool operator==(const ModelConfig& a, const ModelConfig& b) {
    return a.ngram == b.ngram && a.kernels == b.kernels && a.sequence_length == b.sequence_length &&
           a.image_rows == b.image_rows && a.image_cols == b.image_cols && a.pool.kernel == b.pool.kernel &&
           a.pool.stride == b.pool.stride && a.pool.dilation == b.pool.dilation && a.fc1 == b.fc1 &&
           a.fc2 == b.fc2 && a.num_classes == b.num_classes && a.dropout == b.dropout &&
           a.learning_rate == b.learning_rate && a.batch_size == b.batch_size && a.max_epochs == b.max_epochs &&
           a.patience == b.patience && a.seed == b.seed;
  }
};

inline constexpr std::size_t kParamTensors = 8;

/// Conv bank followed by three dense layers. Dense weights are [in x out].
template <typename Real>
struct ModelParams {
  ConvKernelBank<Real> conv;
  Tensor<Real> fc1_w, fc1_b, fc2_w, fc2_b, fc3_w, fc3_b;

  static ModelParams zeros(const ModelConfig& cfg) {
    ModelParams p;
    p.conv = ConvKernelBank<Real>(cfg.kernels, cfg.ngram, cfg.image_rows, cfg.image_cols);
    p.fc1_w = Tensor<Real>({cfg.flatten_length(), cfg.fc1});
    p.fc1_b = Tensor<Real>({cfg.fc1});
    p.fc2_w = Tensor<Real>({cfg.fc1, cfg.fc2});
    p.fc2_b = Tensor<Real>({cfg.fc2});
    p.fc3_w = Tensor<Real>({cfg.fc2, cfg.num_classes});
    p.fc3_b = Tensor<Real>({cfg.num_classes});
    return p;
  }

  // Serialization order.
  std::array<Tensor<Real>*, kParamTensors> tensors() {
    return {&conv.weights, &conv.bias, &fc1_w, &fc1_b, &fc2_w, &fc2_b, &fc3_w, &fc3_b};
  }
  std::array<const Tensor<Real>*, kParamTensors> tensors() const {
    return {&conv.weights, &conv.bias, &fc1_w, &fc1_b, &fc2_w, &fc2_b, &fc3_w, &fc3_b};
  }

  std::size_t parameter_count() const {
    std::size_t n = 0;
    for (auto* t : tensors()) n += t->size();
    return n;
  }

  template <typename Other>
  ModelParams<Other> cast() const {
    ModelParams<Other> out;
    out.conv.weights = conv.weights.template cast<Other>();
    out.conv.bias = conv.bias.template cast<Other>();
    out.fc1_w = fc1_w.template cast<Other>();
    out.fc1_b = fc1_b.template cast<Other>();
    out.fc2_w = fc2_w.template cast<Other>();
    out.fc2_b = fc2_b.template cast<Other>();
    out.fc3_w = fc3_w.template cast<Other>();
    out.fc3_b = fc3_b.template cast<Other>();
    return out;
  }

  friend bool operator==(const ModelParams& a, const ModelParams& b) {
    const auto ta = a.tensors(), tb = b.tensors();
    for (std::size_t i = 0; i < kParamTensors; ++i)
      if (!(*ta[i] == *tb[i])) return false;
    return true;
  }
};

/// Weights ~ U(-sqrt(6/fan_in), +sqrt(6/fan_in)), biases zero.
template <typename Real>
ModelParams<Real> init_params(const ModelConfig& cfg, Rng& rng) {
  cfg.validate();
  auto p = ModelParams<Real>::zeros(cfg);
  auto fill = [&rng](Tensor<Real>& w, std::size_t fan_in) {
    const double bound = std::sqrt(6.0 / double(fan_in));
    for (auto& v : w.data()) v = static_cast<Real>(rng.uniform(-bound, bound));
  };
  fill(p.conv.weights, cfg.ngram * cfg.frame_size());
  fill(p.fc1_w, cfg.flatten_length());
  fill(p.fc2_w, cfg.fc1);
  fill(p.fc3_w, cfg.fc2);
  return p;
}

template <typename Real>
struct ParamVars {
  std::array<Var<Real>, kParamTensors> v;

  Var<Real> conv_w() const { return v[0]; }
  Var<Real> conv_b() const { return v[1]; }
  Var<Real> fc_w(std::size_t layer) const { return v[2 + 2 * layer]; }
  Var<Real> fc_b(std::size_t layer) const { return v[3 + 2 * layer]; }
};

template <typename Real>
ParamVars<Real> bind_params(Tape<Real>& tape, const ModelParams<Real>& params, bool trainable) {
  ParamVars<Real> out;
  const auto ts = params.tensors();
  for (std::size_t i = 0; i < kParamTensors; ++i)
    out.v[i] = trainable ? tape.variable(*ts[i]) : tape.constant(*ts[i]);
  return out;
}

namespace detail {

inline void check_video_shape(const Shape& shape, const ModelConfig& cfg) {
  if (shape != Shape{cfg.sequence_length, cfg.frame_size()})
    throw Error(ErrorKind::ConfigMismatch, "video " + shape_string(shape) + " does not match config [" +
                                               std::to_string(cfg.sequence_length) + "x" +
                                               std::to_string(cfg.frame_size()) + "]");
}

}  // namespace detail

/// conv -> max-over-time -> ReLU -> flatten -> FC1 -> ReLU -> dropout -> FC2
/// -> ReLU -> dropout -> FC3. Returns logits [B x C].
template <typename Real>
Var<Real> forward_batch(Tape<Real>& tape, const ParamVars<Real>& p, std::span<const Tensor<Real>> videos,
                        const ModelConfig& cfg, bool training, Rng& rng) {
  cfg.validate();
  if (videos.empty()) throw Error(ErrorKind::EmptySplit, "forward on an empty batch");
  std::vector<Var<Real>> features;
  features.reserve(videos.size());
  auto weight_columns = conv_weight_columns(p.conv_w());
  for (const auto& video : videos) {
    detail::check_video_shape(video.shape(), cfg);
    auto u = conv_apply(tape.constant(video), weight_columns, p.conv_b());
    features.push_back(relu(max_over_time(u, cfg.pool)));
  }
  auto x = stack_rows(std::span<const Var<Real>>(features));  // [B x k*P]
  if (x.value().cols() != p.fc_w(0).value().rows())
    throw Error(ErrorKind::ConfigMismatch, "flattened length " + std::to_string(x.value().cols()) +
                                               " does not match FC1 input " +
                                               std::to_string(p.fc_w(0).value().rows()));
  auto h1 = dropout(relu(add_row_bias(matmul(x, p.fc_w(0)), p.fc_b(0))), cfg.dropout, rng, training);
  auto h2 = dropout(relu(add_row_bias(matmul(h1, p.fc_w(1)), p.fc_b(1))), cfg.dropout, rng, training);
  return add_row_bias(matmul(h2, p.fc_w(2)), p.fc_b(2));
}

/// Single-document logits [C].
template <typename Real>
Tensor<Real> forward(const Tensor<Real>& video, const ModelParams<Real>& params, const ModelConfig& cfg,
                     bool training, Rng& rng) {
  Tape<Real> tape;
  auto vars = bind_params(tape, params, false);
  auto logits = forward_batch(tape, vars, std::span<const Tensor<Real>>(&video, 1), cfg, training, rng);
  return logits.value().reshaped({cfg.num_classes});
}

/// Index of the largest logit, smallest index on ties.
template <typename Real>
std::size_t argmax_class(std::span<const Real> logits) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < logits.size(); ++c)
    if (logits[c] > logits[best]) best = c;
  return best;
}

// --- checkpoint ---------------------------------------------------------------

struct Checkpoint {
  ModelConfig config;
  std::vector<std::string> label_names;
  ModelParams<float> params;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// "PXGC", u32 version, config, label names, then the eight parameter tensors
/// as [u32 rank][u32 dims...][f32 data...]. Little-endian throughout.
inline void write_checkpoint(std::ostream& out, const Checkpoint& ck) {
  const auto& c = ck.config;
  out.write("PXGC", 4);
  io::write_u32(out, kCheckpointVersion);
  for (std::size_t v : {c.ngram, c.kernels, c.sequence_length, c.image_rows, c.image_cols, c.pool.kernel,
                        c.pool.stride, c.pool.dilation, c.fc1, c.fc2, c.num_classes, c.batch_size, c.max_epochs,
                        c.patience})
    io::write_u32(out, static_cast<std::uint32_t>(v));
  io::write_f64(out, c.dropout);
  io::write_f64(out, c.learning_rate);
  io::write_u64(out, c.seed);
  io::write_u32(out, static_cast<std::uint32_t>(ck.label_names.size()));
  for (const auto& name : ck.label_names) io::write_string(out, name);
  for (const auto* t : ck.params.tensors()) {
    io::write_u32(out, static_cast<std::uint32_t>(t->rank()));
    for (auto d : t->shape()) io::write_u32(out, static_cast<std::uint32_t>(d));
    for (float v : t->data()) io::write_f32(out, v);
  }
  if (!out) throw Error(ErrorKind::IoFailure, "checkpoint write failed");
}

inline Checkpoint read_checkpoint(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() != 4) throw Error(ErrorKind::CorruptLength, "checkpoint shorter than its magic");
  if (std::string_view(magic, 4) != "PXGC") throw Error(ErrorKind::BadMagic, "not a PXGC checkpoint");
  const auto version = io::read_u32(in);
  if (version != kCheckpointVersion)
    throw Error(ErrorKind::VersionMismatch, "checkpoint version " + std::to_string(version) + ", expected " +
                                                std::to_string(kCheckpointVersion));
  Checkpoint ck;
  auto& c = ck.config;
  for (std::size_t* field : {&c.ngram, &c.kernels, &c.sequence_length, &c.image_rows, &c.image_cols,
                             &c.pool.kernel, &c.pool.stride, &c.pool.dilation, &c.fc1, &c.fc2, &c.num_classes,
                             &c.batch_size, &c.max_epochs, &c.patience})
    *field = io::read_u32(in);
  c.dropout = io::read_f64(in);
  c.learning_rate = io::read_f64(in);
  c.seed = io::read_u64(in);
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::CorruptLength, std::string("checkpoint header: ") + e.what());
  }
  const auto labels = io::read_u32(in);
  if (labels != c.num_classes) throw Error(ErrorKind::CorruptLength, "label count does not match classes");
  for (std::uint32_t i = 0; i < labels; ++i) ck.label_names.push_back(io::read_string(in, 1 << 16));

  ck.params = ModelParams<float>::zeros(c);
  for (auto* t : ck.params.tensors()) {
    const auto rank = io::read_u32(in);
    Shape shape;
    for (std::uint32_t i = 0; i < rank; ++i) shape.push_back(io::read_u32(in));
    if (shape != t->shape())
      throw Error(ErrorKind::CorruptLength,
                  "tensor " + shape_string(shape) + " where " + shape_string(t->shape()) + " was expected");
    for (auto& v : t->data()) v = io::read_f32(in);
  }
  if (in.peek() != std::char_traits<char>::eof()) throw Error(ErrorKind::CorruptLength, "trailing bytes");
  return ck;
}

/// Writes to a sibling temp file, then renames over `path`.
template <typename Writer>
void write_file_atomically(const std::filesystem::path& path, Writer&& writer) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoFailure, "cannot open " + tmp.string());
    writer(out);
    out.flush();
    if (!out) throw Error(ErrorKind::IoFailure, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::IoFailure, "rename to " + path.string() + ": " + ec.message());
}

inline void save_checkpoint(const Checkpoint& ck, const std::filesystem::path& path) {
  write_file_atomically(path, [&](std::ostream& out) { write_checkpoint(out, ck); });
}

inline Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open " + path.string());
  return read_checkpoint(in);
}

// --- evaluation ------------------------------------------------------------

/// Renders a prepared document into the [L x 2620] input the network reads.
template <typename Real>
Tensor<Real> document_video(const PreparedDoc& doc, const ModelConfig& cfg) {
  if (!cfg.renders_words())
    throw Error(ErrorKind::ConfigMismatch, "word rendering needs 20x131 frames");
  return video_tensor<Real>(make_text_video(doc.tokens, GlyphSet::embedded(), cfg.sequence_length));
}

struct EvalResult {
  double accuracy = 0.0;
  std::vector<std::size_t> predictions;
};

/// Predicted classes of a run of documents, scored as one inference batch.
inline std::vector<std::size_t> predict_batch(const Checkpoint& ck, std::span<const PreparedDoc> docs) {
  if (docs.empty()) return {};
  Tape<float> tape;
  auto vars = bind_params(tape, ck.params, false);
  std::vector<Tensor<float>> videos;
  videos.reserve(docs.size());
  for (const auto& d : docs) videos.push_back(document_video<float>(d, ck.config));
  Rng unused(0);
  const auto& logits =
      forward_batch(tape, vars, std::span<const Tensor<float>>(videos), ck.config, false, unused).value();
  std::vector<std::size_t> out(docs.size());
  for (std::size_t r = 0; r < docs.size(); ++r)
    out[r] = argmax_class<float>(logits.data().subspan(r * logits.cols(), logits.cols()));
  return out;
}

inline std::size_t predict(const Checkpoint& ck, const PreparedDoc& doc) {
  return predict_batch(ck, std::span<const PreparedDoc>(&doc, 1))[0];
}

inline constexpr std::size_t kEvalBatch = 32;

inline EvalResult evaluate(const std::vector<PreparedDoc>& docs, const Checkpoint& ck, std::size_t threads = 1) {
  if (docs.empty()) throw Error(ErrorKind::EmptySplit, "no documents to evaluate");
  for (const auto& d : docs)
    if (d.label >= ck.config.num_classes)
      throw Error(ErrorKind::ConfigMismatch, "document label " + std::to_string(d.label) + " but checkpoint has " +
                                                 std::to_string(ck.config.num_classes) + " classes");
  EvalResult r;
  r.predictions.resize(docs.size());
  parallel_chunks(docs.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t lo = begin; lo < end; lo += kEvalBatch) {
      const std::size_t hi = std::min(end, lo + kEvalBatch);
      const auto p = predict_batch(ck, std::span<const PreparedDoc>(docs.data() + lo, hi - lo));
      std::copy(p.begin(), p.end(), r.predictions.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  });
  std::size_t correct = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) correct += r.predictions[i] == docs[i].label;
  r.accuracy = double(correct) / double(docs.size());
  return r;
}

inline std::vector<PreparedDoc> prepare_documents(const std::vector<Document>& docs) {
  std::vector<PreparedDoc> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(prepare_document(d));
  return out;
}

inline EvalResult evaluate(const std::vector<Document>& docs, const Checkpoint& ck, std::size_t threads = 1) {
  return evaluate(prepare_documents(docs), ck, threads);
}

// --- training --------------------------------------------------------------

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double val_acc = 0.0;
  double seconds = 0.0;
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  std::size_t best_epoch = 0;
  double seconds = 0.0;
};

struct TrainOptions {
  // Threads > 1 split each batch into that many sub-batches whose gradients
  // are summed in chunk order; results are reproducible per thread count.
  std::size_t threads = 1;
  std::function<void(const EpochRecord&)> on_epoch;
};

struct TrainOutcome {
  Checkpoint checkpoint;
  TrainReport report;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ b);
}

namespace detail {

struct BatchGrad {
  std::array<Tensor<float>, kParamTensors> grads;
  double loss_sum = 0.0;  // sum of per-document losses
};

inline BatchGrad batch_gradient(const ModelParams<float>& params, const ModelConfig& cfg,
                                std::span<const PreparedDoc* const> docs, std::size_t batch_total, Rng& rng) {
  Tape<float> tape;
  auto vars = bind_params(tape, params, true);
  std::vector<Tensor<float>> videos;
  std::vector<std::size_t> labels;
  videos.reserve(docs.size());
  for (const auto* d : docs) {
    videos.push_back(document_video<float>(*d, cfg));
    labels.push_back(d->label);
  }
  auto logits = forward_batch(tape, vars, std::span<const Tensor<float>>(videos), cfg, true, rng);
  auto loss = softmax_cross_entropy(logits, std::span<const std::size_t>(labels));
  // Rescale the sub-batch mean so that summed chunk gradients equal the
  // gradient of the full-batch mean.
  const double share = double(docs.size()) / double(batch_total);
  BatchGrad out;
  out.loss_sum = double(loss.value()[0]) * double(docs.size());
  tape.backward(loss);
  for (std::size_t i = 0; i < kParamTensors; ++i) {
    out.grads[i] = tape.grad(vars.v[i].id);
    if (share != 1.0)
      for (auto& g : out.grads[i].data()) g = static_cast<float>(g * share);
  }
  return out;
}

}  // namespace detail

/// Mini-batch Adam with per-epoch reshuffling, validation after every epoch,
/// best-validation parameter selection and patience-based early stopping.
inline TrainOutcome train(const std::vector<PreparedDoc>& train_docs, const std::vector<PreparedDoc>& val_docs,
                          const ModelConfig& cfg, std::vector<std::string> label_names,
                          const TrainOptions& options = {}) {
  cfg.validate();
  if (train_docs.empty() || val_docs.empty()) throw Error(ErrorKind::EmptySplit, "train and validation sets must be non-empty");
  for (const auto* set : {&train_docs, &val_docs})
    for (const auto& d : *set)
      if (d.label >= cfg.num_classes)
        throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(d.label) + " with " +
                                                    std::to_string(cfg.num_classes) + " classes");
  if (label_names.empty())
    for (std::size_t c = 0; c < cfg.num_classes; ++c) label_names.push_back(std::to_string(c));
  if (label_names.size() != cfg.num_classes)
    throw Error(ErrorKind::ConfigMismatch, "label name count does not match num_classes");

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  Rng init_rng(cfg.seed);
  Checkpoint current{cfg, label_names, init_params<float>(cfg, init_rng)};
  Checkpoint best = current;
  std::array<AdamState<float>, kParamTensors> adam;
  const AdamConfig adam_cfg{cfg.learning_rate, 0.9, 0.999, 1e-8};

  Rng shuffle_rng(derive_seed(cfg.seed, 0x5348));
  std::vector<const PreparedDoc*> order;
  for (const auto& d : train_docs) order.push_back(&d);

  TrainOutcome out;
  double best_acc = -1.0;
  std::size_t since_best = 0, step = 0;
  for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const auto e0 = clock::now();
    shuffle_rng.shuffle(std::span<const PreparedDoc*>(order));
    double loss_total = 0.0;
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size, ++step) {
      const std::size_t count = std::min(cfg.batch_size, order.size() - start);
      std::span<const PreparedDoc* const> batch(order.data() + start, count);
      const std::size_t chunks = std::max<std::size_t>(1, std::min(options.threads, count));
      std::vector<detail::BatchGrad> parts(chunks);
      parallel_chunks(chunks, chunks, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
          const std::size_t lo = count * c / chunks, hi = count * (c + 1) / chunks;
          Rng rng(derive_seed(cfg.seed, step + 1, c));
          parts[c] = detail::batch_gradient(current.params, cfg, batch.subspan(lo, hi - lo), count, rng);
        }
      });
      for (std::size_t c = 1; c < chunks; ++c)
        for (std::size_t i = 0; i < kParamTensors; ++i)
          for (std::size_t j = 0; j < parts[0].grads[i].size(); ++j) parts[0].grads[i][j] += parts[c].grads[i][j];
      auto params = current.params.tensors();
      for (std::size_t i = 0; i < kParamTensors; ++i) adam_step(*params[i], parts[0].grads[i], adam[i], adam_cfg);
      for (const auto& p : parts) loss_total += p.loss_sum;
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = loss_total / double(order.size());
    rec.val_acc = evaluate(val_docs, current, options.threads).accuracy;
    rec.seconds = std::chrono::duration<double>(clock::now() - e0).count();
    out.report.epochs.push_back(rec);
    if (options.on_epoch) options.on_epoch(rec);

    if (rec.val_acc > best_acc) {
      best_acc = rec.val_acc;
      best = current;
      out.report.best_epoch = epoch;
      since_best = 0;
    } else if (++since_best >= cfg.patience) {
      break;
    }
  }
  out.checkpoint = std::move(best);
  out.report.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return out;
}

inline TrainOutcome train(const DatasetSplit& split, const ModelConfig& cfg, const TrainOptions& options = {}) {
  return train(prepare_documents(split.train), prepare_documents(split.validation), cfg, split.label_names,
               options);
}

}  // namespace pixeltext
