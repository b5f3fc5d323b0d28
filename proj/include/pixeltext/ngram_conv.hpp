#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "pixeltext/autodiff.hpp"
#include "pixeltext/error.hpp"
#include "pixeltext/tensor.hpp"

namespace pixeltext {

/// k detectors, each spanning n whole frames: weights [k][n][rows][cols].
template <typename Real>
struct ConvKernelBank {
  Tensor<Real> weights;
  Tensor<Real> bias;

  ConvKernelBank() = default;
  ConvKernelBank(std::size_t kernels, std::size_t span, std::size_t rows, std::size_t cols)
      : weights({kernels, span, rows, cols}), bias({kernels}) {}

  std::size_t kernels() const { return weights.dim(0); }
  std::size_t span() const { return weights.dim(1); }
  std::size_t frame_size() const { return weights.dim(2) * weights.dim(3); }
};

/// Kernel responses U: row i is kernel i, column j the n-gram starting at
/// word j.
template <typename Real>
struct FeatureMap {
  Tensor<Real> response;  // [k x T]

  std::size_t kernels() const { return response.rows(); }
  std::size_t positions() const { return response.cols(); }
  Real at(std::size_t kernel, std::size_t position) const { return response.at(kernel, position); }
};

struct PoolConfig {
  std::size_t kernel = 3;
  std::size_t stride = 3;
  std::size_t dilation = 3;
};

/// floor((T - d(kernel - 1) - 1) / stride) + 1, or 0 when no window fits.
constexpr std::size_t pool_output_length(std::size_t length, const PoolConfig& cfg) {
  const std::size_t reach = cfg.dilation * (cfg.kernel - 1) + 1;
  if (cfg.kernel == 0 || cfg.stride == 0 || cfg.dilation == 0 || length < reach) return 0;
  return (length - reach) / cfg.stride + 1;
}

inline std::size_t conv_output_length(std::size_t frames, std::size_t span) {
  if (span == 0 || frames < span)
    throw Error(ErrorKind::SequenceTooShort,
                std::to_string(frames) + " frames cannot hold a " + std::to_string(span) + "-gram");
  return frames - span + 1;
}

namespace detail {

template <typename Real>
void check_video(const Tensor<Real>& video, const ConvKernelBank<Real>& bank) {
  require_rank(video.shape(), 2, "video");
  if (video.cols() != bank.frame_size())
    throw Error(ErrorKind::ShapeMismatch, "frame size " + std::to_string(video.cols()) +
                                              " does not match kernel frame size " +
                                              std::to_string(bank.frame_size()));
}

}  // namespace detail

/// Weight bank [k][n][rows][cols] viewed as the [nF x k] matrix whose
/// column c is kernel c flattened.
template <typename Real>
Var<Real> conv_weight_columns(Var<Real> weights) {
  const auto& w = weights.value();
  require_rank(w.shape(), 4, "conv weights");
  return transpose(reshape(weights, Shape{w.dim(0), w.dim(1) * w.dim(2) * w.dim(3)}));
}

namespace detail {

// Nonzero pixels of each frame. Rendered words ink only a few percent of a
// frame.
template <typename Real>
struct SparseFrames {
  std::vector<std::size_t> offsets;  // frame f owns entries [offsets[f], offsets[f + 1])
  std::vector<std::uint32_t> pixel;
  std::vector<Real> value;

  explicit SparseFrames(const Tensor<Real>& video) : offsets(video.rows() + 1, 0) {
    const std::size_t frame = video.cols();
    for (std::size_t f = 0; f < video.rows(); ++f) {
      for (std::size_t p = 0; p < frame; ++p) {
        const Real x = video[f * frame + p];
        if (x != Real{0}) {
          pixel.push_back(static_cast<std::uint32_t>(p));
          value.push_back(x);
        }
      }
      offsets[f + 1] = pixel.size();
    }
  }
};

}  // namespace detail

/// Feature map [k x T] from a [L x F] video and the [nF x k] weight columns
/// from conv_weight_columns(): U[c][j] = b[c] + sum_i frame(j+i) . W[c][i].
/// Same result as the (k x nF) weights times the unfolded (nF x T) frames,
/// but only inked pixels are visited and the unfolding is never built.
template <typename Real>
Var<Real> conv_apply(Var<Real> video, Var<Real> weight_columns, Var<Real> bias) {
  const auto& wc = weight_columns.value();
  const auto& vv = video.value();
  require_rank(vv.shape(), 2, "video");
  require_rank(wc.shape(), 2, "conv weight columns");
  const std::size_t frame = vv.cols(), k = wc.cols();
  if (wc.rows() % frame != 0)
    throw Error(ErrorKind::ShapeMismatch, "frame size " + std::to_string(frame) + " does not divide kernel size " +
                                              std::to_string(wc.rows()));
  require_same_shape(bias.shape(), Shape{k}, "conv bias");
  const std::size_t span = wc.rows() / frame;
  const std::size_t positions = conv_output_length(vv.rows(), span);

  auto sparse = std::make_shared<const detail::SparseFrames<Real>>(vv);
  // partial[f][i][c] = frame f . W[c][i]
  std::vector<Real> partial(vv.rows() * span * k, Real{0});
  const Real* w = wc.data().data();
  for (std::size_t f = 0; f < vv.rows(); ++f)
    for (std::size_t i = 0; i < span; ++i) {
      Real* out = partial.data() + (f * span + i) * k;
      for (std::size_t e = sparse->offsets[f]; e < sparse->offsets[f + 1]; ++e) {
        const Real x = sparse->value[e];
        const Real* row = w + (i * frame + sparse->pixel[e]) * k;
        for (std::size_t c = 0; c < k; ++c) out[c] += x * row[c];
      }
    }
  Tensor<Real> u({k, positions});
  const auto& bv = bias.value();
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < positions; ++j) {
      Real acc = bv[c];
      for (std::size_t i = 0; i < span; ++i) acc += partial[((j + i) * span + i) * k + c];
      u.at(c, j) = acc;
    }

  auto fn = [video, weight_columns, bias, sparse, span, positions](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);  // [k x T]
    const std::size_t kk = g.rows(), frame = t.value(video.id).cols();
    if (t.requires_grad(bias.id)) {
      auto& gb = t.grad_slot(bias.id);
      for (std::size_t c = 0; c < kk; ++c)
        for (std::size_t j = 0; j < positions; ++j) gb[c] += g.at(c, j);
    }
    if (t.requires_grad(weight_columns.id)) {
      auto& gw = t.grad_slot(weight_columns.id);
      std::vector<Real> gcol(kk);
      for (std::size_t j = 0; j < positions; ++j) {
        for (std::size_t c = 0; c < kk; ++c) gcol[c] = g.at(c, j);
        for (std::size_t i = 0; i < span; ++i)
          for (std::size_t e = sparse->offsets[j + i]; e < sparse->offsets[j + i + 1]; ++e) {
            const Real x = sparse->value[e];
            Real* row = gw.data().data() + (i * frame + sparse->pixel[e]) * kk;
            for (std::size_t c = 0; c < kk; ++c) row[c] += x * gcol[c];
          }
      }
    }
    if (t.requires_grad(video.id)) {
      const auto& wcv = t.value(weight_columns.id);
      auto& gv = t.grad_slot(video.id);
      for (std::size_t j = 0; j < positions; ++j)
        for (std::size_t i = 0; i < span; ++i)
          for (std::size_t p = 0; p < frame; ++p) {
            const Real* row = wcv.data().data() + (i * frame + p) * kk;
            Real acc = 0;
            for (std::size_t c = 0; c < kk; ++c) acc += row[c] * g.at(c, j);
            gv[(j + i) * frame + p] += acc;
          }
    }
  };
  return video.tape->record(std::move(u), {video, weight_columns, bias}, std::move(fn));
}

template <typename Real>
Var<Real> conv_forward(Var<Real> video, Var<Real> weights, Var<Real> bias) {
  const auto& w = weights.value();
  require_rank(w.shape(), 4, "conv weights");
  require_rank(video.shape(), 2, "video");
  if (video.shape()[1] != w.dim(2) * w.dim(3))
    throw Error(ErrorKind::ShapeMismatch, "frame size " + std::to_string(video.shape()[1]) + " vs kernel " +
                                              std::to_string(w.dim(2) * w.dim(3)));
  return conv_apply(video, conv_weight_columns(weights), bias);
}

template <typename Real>
FeatureMap<Real> conv_forward(const Tensor<Real>& video, const ConvKernelBank<Real>& bank) {
  detail::check_video(video, bank);
  Tape<Real> tape;
  auto u = conv_forward(tape.constant(video), tape.constant(bank.weights), tape.constant(bank.bias));
  return {u.value()};
}

/// Reference implementation: nested loops over (kernel, position, word,
/// pixel), no unfolding and no matrix product.
template <typename Real>
FeatureMap<Real> conv_direct(const Tensor<Real>& video, const ConvKernelBank<Real>& bank) {
  detail::check_video(video, bank);
  const std::size_t k = bank.kernels(), n = bank.span(), frame = bank.frame_size();
  const std::size_t positions = conv_output_length(video.rows(), n);
  FeatureMap<Real> out{Tensor<Real>({k, positions})};
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < positions; ++j) {
      double acc = bank.bias[c];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < frame; ++p)
          acc += double(bank.weights[(c * n + i) * frame + p]) * double(video.at(j + i, p));
      out.response.at(c, j) = static_cast<Real>(acc);
    }
  return out;
}

struct PoolResult {
  std::vector<std::size_t> argmax;  // [k x P], index into the time axis
  std::size_t channels = 0;
  std::size_t outputs = 0;

  std::size_t at(std::size_t channel, std::size_t window) const { return argmax[channel * outputs + window]; }
};

/// Window t of each channel reads {t*stride + i*dilation : i < kernel}.
/// Ties go to the smallest index.
template <typename Real>
std::pair<Tensor<Real>, PoolResult> max_over_time(const Tensor<Real>& u, const PoolConfig& cfg) {
  require_rank(u.shape(), 2, "max_over_time input");
  const std::size_t channels = u.rows(), length = u.cols();
  const std::size_t outputs = pool_output_length(length, cfg);
  if (outputs == 0)
    throw Error(ErrorKind::SequenceTooShort,
                "pooling window does not fit " + std::to_string(length) + " positions");
  Tensor<Real> pooled({channels, outputs});
  PoolResult idx{std::vector<std::size_t>(channels * outputs), channels, outputs};
  for (std::size_t c = 0; c < channels; ++c)
    for (std::size_t t = 0; t < outputs; ++t) {
      std::size_t best = t * cfg.stride;
      for (std::size_t i = 1; i < cfg.kernel; ++i) {
        const std::size_t pos = t * cfg.stride + i * cfg.dilation;
        if (u.at(c, pos) > u.at(c, best)) best = pos;
      }
      pooled.at(c, t) = u.at(c, best);
      idx.argmax[c * outputs + t] = best;
    }
  return {std::move(pooled), std::move(idx)};
}

/// Gradient flows only to each window's argmax.
template <typename Real>
Var<Real> max_over_time(Var<Real> u, const PoolConfig& cfg) {
  auto [pooled, idx] = max_over_time(u.value(), cfg);
  return u.tape->record(std::move(pooled), {u}, [u, idx = std::move(idx)](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    auto& gu = t.grad_slot(u.id);
    for (std::size_t c = 0; c < idx.channels; ++c)
      for (std::size_t w = 0; w < idx.outputs; ++w) gu.at(c, idx.at(c, w)) += g.at(c, w);
  });
}

/// ReLU applied after pooling.
template <typename Real>
Tensor<Real> pooled_relu(const Tensor<Real>& pooled) {
  Tensor<Real> out = pooled;
  for (auto& v : out.data()) v = std::max(v, Real{0});
  return out;
}

}  // namespace pixeltext
