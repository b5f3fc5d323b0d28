#pragma once

#include <span>
#include <vector>

#include "pixeltext/gradcheck.hpp"
#include "pixeltext/model.hpp"

namespace pixeltext {

/// Small network for end-to-end gradient checks: L=6, k=3, 4x6 frames,
/// FC 9 -> 8 -> 5 -> 2. The default 3/3/3 pool cannot fit T=5, so the toy
/// pools with kernel 2, stride 1, dilation 2 (P=3).
inline ModelConfig toy_config() {
  ModelConfig cfg;
  cfg.sequence_length = 6;
  cfg.kernels = 3;
  cfg.image_rows = 4;
  cfg.image_cols = 6;
  cfg.pool = {2, 1, 2};
  cfg.fc1 = 8;
  cfg.fc2 = 5;
  cfg.num_classes = 2;
  return cfg;
}

/// Loss of a two-sample batch as a function of every parameter at once,
/// 64-bit, dropout active with a fixed mask.
inline GradCheckResult toy_gradient_check(std::uint64_t seed, double h) {
  const auto cfg = toy_config();
  Rng rng(seed);
  auto params = init_params<double>(cfg, rng);
  for (auto* t : params.tensors())
    if (t->rank() == 1)
      for (auto& v : t->data()) v = rng.uniform(-0.5, 0.5);

  std::vector<Tensor<double>> videos;
  for (int i = 0; i < 2; ++i) {
    Tensor<double> v({cfg.sequence_length, cfg.frame_size()});
    for (auto& x : v.data()) x = rng.uniform() < 0.4 ? 1.0 : 0.0;
    videos.push_back(std::move(v));
  }
  const std::vector<std::size_t> labels = {0, 1};
  const std::uint64_t drop_seed = rng.next_u64();

  std::vector<double> flat;
  std::vector<Shape> shapes;
  for (const auto* t : params.tensors()) {
    shapes.push_back(t->shape());
    flat.insert(flat.end(), t->data().begin(), t->data().end());
  }
  const std::size_t count = flat.size();
  const Tensor<double> x0({count}, std::move(flat));

  auto loss = [&](Tape<double>& tape, Var<double> x) {
    ParamVars<double> vars;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < kParamTensors; ++i) {
      vars.v[i] = slice(x, offset, shapes[i]);
      offset += shape_size(shapes[i]);
    }
    Rng drop(drop_seed);
    auto logits = forward_batch(tape, vars, std::span<const Tensor<double>>(videos), cfg, true, drop);
    return softmax_cross_entropy(logits, std::span<const std::size_t>(labels));
  };
  return grad_check<double>(loss, x0, h);
}

/// 32-bit check of the output layer weights of a full-size model on two
/// rendered documents.
inline GradCheckResult model_gradient_check(const ModelConfig& cfg, const std::vector<PreparedDoc>& docs,
                                            double h) {
  Rng rng(cfg.seed);
  const auto params = init_params<float>(cfg, rng);
  std::vector<Tensor<float>> videos;
  std::vector<std::size_t> labels;
  for (const auto& d : docs) {
    videos.push_back(document_video<float>(d, cfg));
    labels.push_back(d.label);
  }
  const std::uint64_t drop_seed = rng.next_u64();
  auto loss = [&](Tape<float>& tape, Var<float> w3) {
    auto vars = bind_params(tape, params, false);
    vars.v[6] = w3;
    Rng drop(drop_seed);
    auto logits = forward_batch(tape, vars, std::span<const Tensor<float>>(videos), cfg, true, drop);
    return softmax_cross_entropy(logits, std::span<const std::size_t>(labels));
  };
  return grad_check<float>(loss, params.fc3_w, h);
}

}  // namespace pixeltext
