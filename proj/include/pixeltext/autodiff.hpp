#pragma once

#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pixeltext/error.hpp"
#include "pixeltext/rng.hpp"
#include "pixeltext/tensor.hpp"

namespace pixeltext {

template <typename Real>
class Tape;

/// Handle to a node recorded on a Tape. Cheap to copy; only valid while the
/// tape is alive.
template <typename Real>
struct Var {
  Tape<Real>* tape = nullptr;
  std::size_t id = 0;

  const Tensor<Real>& value() const { return tape->value(id); }
  const Tensor<Real>& grad() const { return tape->grad(id); }
  const Shape& shape() const { return value().shape(); }
};

/// Linear record of a forward computation. Nodes are appended in evaluation
/// order, so a reverse sweep over the vector is a valid topological order for
/// the backward pass. One tape per training step.
template <typename Real>
class Tape {
 public:
  using value_type = Real;
  using BackwardFn = std::function<void(Tape&, std::size_t self)>;

  Var<Real> constant(Tensor<Real> value) { return push(std::move(value), false, {}); }

  Var<Real> variable(Tensor<Real> value) { return push(std::move(value), true, {}); }

  Var<Real> record(Tensor<Real> value, std::initializer_list<Var<Real>> parents, BackwardFn fn) {
    return record(std::move(value), std::span<const Var<Real>>(parents.begin(), parents.size()),
                  std::move(fn));
  }

  Var<Real> record(Tensor<Real> value, std::span<const Var<Real>> parents, BackwardFn fn) {
    bool needs = false;
    for (const auto& p : parents) needs = needs || nodes_.at(p.id).requires_grad;
    return push(std::move(value), needs, needs ? std::move(fn) : BackwardFn{});
  }

  const Tensor<Real>& value(std::size_t id) const { return nodes_.at(id).value; }
  bool requires_grad(std::size_t id) const { return nodes_.at(id).requires_grad; }

  const Tensor<Real>& grad(std::size_t id) const {
    const auto& n = nodes_.at(id);
    if (n.grad.empty()) throw Error(ErrorKind::ShapeMismatch, "gradient requested before backward()");
    return n.grad;
  }

  // Accumulation target for backward functions. Allocated on first use.
  Tensor<Real>& grad_slot(std::size_t id) {
    auto& n = nodes_[id];
    if (n.grad.empty()) n.grad = Tensor<Real>(n.value.shape());
    return n.grad;
  }

  std::size_t size() const noexcept { return nodes_.size(); }

  /// Seeds d(loss)/d(loss) = 1 and sweeps the tape in reverse.
  void backward(Var<Real> loss) {
    if (loss.value().size() != 1)
      throw Error(ErrorKind::ShapeMismatch, "backward() needs a scalar, got " + shape_string(loss.shape()));
    for (std::size_t i = 0; i <= loss.id; ++i)
      if (nodes_[i].requires_grad) grad_slot(i);
    nodes_[loss.id].grad[0] = Real{1};
    for (std::size_t i = loss.id + 1; i-- > 0;) {
      if (nodes_[i].backward) nodes_[i].backward(*this, i);
    }
  }

 private:
  struct Node {
    Tensor<Real> value;
    Tensor<Real> grad;
    bool requires_grad = false;
    BackwardFn backward;
  };

  Var<Real> push(Tensor<Real> value, bool requires_grad, BackwardFn fn) {
    nodes_.push_back(Node{std::move(value), {}, requires_grad, std::move(fn)});
    return Var<Real>{this, nodes_.size() - 1};
  }

  std::deque<Node> nodes_;  // stable references while recording
};

template <typename Real>
Tensor<Real> matmul(const Tensor<Real>& a, const Tensor<Real>& b) {
  require_rank(a.shape(), 2, "matmul lhs");
  require_rank(b.shape(), 2, "matmul rhs");
  if (a.cols() != b.rows())
    throw Error(ErrorKind::ShapeMismatch,
                "matmul inner dimensions " + shape_string(a.shape()) + " * " + shape_string(b.shape()));
  Tensor<Real> c({a.rows(), b.cols()});
  kernels::gemm_nn(a.rows(), a.cols(), b.cols(), a.data().data(), b.data().data(), c.data().data());
  return c;
}

template <typename Real>
Var<Real> matmul(Var<Real> a, Var<Real> b) {
  auto out = matmul(a.value(), b.value());
  return a.tape->record(std::move(out), {a, b}, [a, b](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    const auto& av = t.value(a.id);
    const auto& bv = t.value(b.id);
    const std::size_t m = av.rows(), k = av.cols(), p = bv.cols();
    if (t.requires_grad(a.id))
      kernels::gemm_nt(m, k, p, g.data().data(), bv.data().data(), t.grad_slot(a.id).data().data());
    if (t.requires_grad(b.id))
      kernels::gemm_tn(m, k, p, av.data().data(), g.data().data(), t.grad_slot(b.id).data().data());
  });
}

/// x[m x n] + bias[n] added to every row.
template <typename Real>
Var<Real> add_row_bias(Var<Real> x, Var<Real> bias) {
  const auto& xv = x.value();
  const auto& bv = bias.value();
  require_rank(xv.shape(), 2, "add_row_bias input");
  require_same_shape(bv.shape(), Shape{xv.cols()}, "add_row_bias bias");
  Tensor<Real> out = xv;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) += bv[c];
  return x.tape->record(std::move(out), {x, bias}, [x, bias](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    if (t.requires_grad(x.id)) {
      auto& gx = t.grad_slot(x.id);
      for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i];
    }
    if (t.requires_grad(bias.id)) {
      auto& gb = t.grad_slot(bias.id);
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) gb[c] += g.at(r, c);
    }
  });
}

template <typename Real>
Var<Real> transpose(Var<Real> x) {
  const auto& xv = x.value();
  require_rank(xv.shape(), 2, "transpose");
  Tensor<Real> out({xv.cols(), xv.rows()});
  for (std::size_t r = 0; r < xv.rows(); ++r)
    for (std::size_t c = 0; c < xv.cols(); ++c) out.at(c, r) = xv.at(r, c);
  return x.tape->record(std::move(out), {x}, [x](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    auto& gx = t.grad_slot(x.id);
    for (std::size_t r = 0; r < gx.rows(); ++r)
      for (std::size_t c = 0; c < gx.cols(); ++c) gx.at(r, c) += g.at(c, r);
  });
}

template <typename Real>
Var<Real> reshape(Var<Real> x, Shape shape) {
  auto out = x.value().reshaped(std::move(shape));
  return x.tape->record(std::move(out), {x}, [x](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    auto& gx = t.grad_slot(x.id);
    for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i];
  });
}

/// Contiguous window of x's flat storage, reshaped to `shape`.
template <typename Real>
Var<Real> slice(Var<Real> x, std::size_t offset, Shape shape) {
  const std::size_t count = shape_size(shape);
  const auto& xv = x.value();
  if (offset + count > xv.size())
    throw Error(ErrorKind::ShapeMismatch, "slice runs past the end of " + shape_string(xv.shape()));
  Tensor<Real> out(std::move(shape), std::vector<Real>(xv.data().begin() + offset,
                                                       xv.data().begin() + offset + count));
  return x.tape->record(std::move(out), {x}, [x, offset, count](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    auto& gx = t.grad_slot(x.id);
    for (std::size_t i = 0; i < count; ++i) gx[offset + i] += g[i];
  });
}

/// Stacks equally sized tensors as the rows of a [count x size] matrix.
template <typename Real>
Var<Real> stack_rows(std::span<const Var<Real>> parts) {
  if (parts.empty()) throw Error(ErrorKind::ShapeMismatch, "stack_rows of nothing");
  const std::size_t width = parts[0].value().size();
  Tensor<Real> out({parts.size(), width});
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const auto& v = parts[r].value();
    if (v.size() != width) throw Error(ErrorKind::ShapeMismatch, "stack_rows: ragged parts");
    std::copy(v.data().begin(), v.data().end(), out.data().begin() + r * width);
  }
  std::vector<Var<Real>> kept(parts.begin(), parts.end());
  auto fn = [kept, width](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    for (std::size_t r = 0; r < kept.size(); ++r) {
      if (!t.requires_grad(kept[r].id)) continue;
      auto& gp = t.grad_slot(kept[r].id);
      for (std::size_t i = 0; i < width; ++i) gp[i] += g[r * width + i];
    }
  };
  return parts[0].tape->record(std::move(out), parts, std::move(fn));
}

template <typename Real>
Var<Real> relu(Var<Real> x) {
  Tensor<Real> out = x.value();
  for (auto& v : out.data()) v = v > Real{0} ? v : Real{0};
  return x.tape->record(std::move(out), {x}, [x](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    const auto& xv = t.value(x.id);
    auto& gx = t.grad_slot(x.id);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (xv[i] > Real{0}) gx[i] += g[i];
  });
}

/// Inverted dropout: survivors are scaled by 1/(1-rate) at training time so
/// inference is the identity.
template <typename Real>
Var<Real> dropout(Var<Real> x, double rate, Rng& rng, bool training) {
  if (!(rate >= 0.0 && rate < 1.0))
    throw Error(ErrorKind::ConfigMismatch, "dropout rate must lie in [0, 1)");
  if (!training || rate == 0.0) return x;
  const Real scale = static_cast<Real>(1.0 / (1.0 - rate));
  Tensor<Real> mask(x.shape());
  for (auto& m : mask.data()) m = rng.uniform() < rate ? Real{0} : scale;
  Tensor<Real> out = x.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= mask[i];
  return x.tape->record(std::move(out), {x}, [x, mask = std::move(mask)](Tape<Real>& t, std::size_t self) {
    const auto& g = t.grad(self);
    auto& gx = t.grad_slot(x.id);
    for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i] * mask[i];
  });
}

template <typename Real>
Var<Real> sum(Var<Real> x) {
  double acc = 0.0;
  for (auto v : x.value().data()) acc += v;
  return x.tape->record(Tensor<Real>({1}, static_cast<Real>(acc)), {x},
                        [x](Tape<Real>& t, std::size_t self) {
                          const Real g = t.grad(self)[0];
                          for (auto& v : t.grad_slot(x.id).data()) v += g;
                        });
}

/// sum(x * weights) for a fixed weight tensor of the same shape; handy for
/// turning any tensor-valued op into a scalar test objective.
template <typename Real>
Var<Real> weighted_sum(Var<Real> x, const Tensor<Real>& weights) {
  require_same_shape(x.shape(), weights.shape(), "weighted_sum");
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) acc += double(x.value()[i]) * double(weights[i]);
  return x.tape->record(Tensor<Real>({1}, static_cast<Real>(acc)), {x},
                        [x, weights](Tape<Real>& t, std::size_t self) {
                          const Real g = t.grad(self)[0];
                          auto& gx = t.grad_slot(x.id);
                          for (std::size_t i = 0; i < gx.size(); ++i) gx[i] += g * weights[i];
                        });
}

/// Row-wise softmax of a [B x C] matrix, max-subtracted.
template <typename Real>
Tensor<Real> softmax_rows(const Tensor<Real>& logits) {
  require_rank(logits.shape(), 2, "softmax");
  Tensor<Real> p(logits.shape());
  for (std::size_t r = 0; r < logits.rows(); ++r) {
    Real mx = logits.at(r, 0);
    for (std::size_t c = 1; c < logits.cols(); ++c) mx = std::max(mx, logits.at(r, c));
    double z = 0.0;
    for (std::size_t c = 0; c < logits.cols(); ++c) z += std::exp(double(logits.at(r, c) - mx));
    for (std::size_t c = 0; c < logits.cols(); ++c)
      p.at(r, c) = static_cast<Real>(std::exp(double(logits.at(r, c) - mx)) / z);
  }
  return p;
}

/// Mean negative log-likelihood of the labelled classes.
template <typename Real>
Var<Real> softmax_cross_entropy(Var<Real> logits, std::span<const std::size_t> labels) {
  const auto& lv = logits.value();
  require_rank(lv.shape(), 2, "softmax_cross_entropy");
  const std::size_t batch = lv.rows(), classes = lv.cols();
  if (labels.size() != batch)
    throw Error(ErrorKind::ShapeMismatch, "one label per logits row required");
  for (auto y : labels)
    if (y >= classes)
      throw Error(ErrorKind::LabelOutOfRange,
                  "label " + std::to_string(y) + " with " + std::to_string(classes) + " classes");
  double total = 0.0;
  for (std::size_t r = 0; r < batch; ++r) {
    Real mx = lv.at(r, 0);
    for (std::size_t c = 1; c < classes; ++c) mx = std::max(mx, lv.at(r, c));
    double z = 0.0;
    for (std::size_t c = 0; c < classes; ++c) z += std::exp(double(lv.at(r, c) - mx));
    total += std::log(z) - double(lv.at(r, labels[r]) - mx);
  }
  std::vector<std::size_t> ys(labels.begin(), labels.end());
  return logits.tape->record(
      Tensor<Real>({1}, static_cast<Real>(total / double(batch))), {logits},
      [logits, ys = std::move(ys)](Tape<Real>& t, std::size_t self) {
        const Real g = t.grad(self)[0];
        const auto p = softmax_rows(t.value(logits.id));
        auto& gl = t.grad_slot(logits.id);
        const Real inv_b = g / static_cast<Real>(p.rows());
        for (std::size_t r = 0; r < p.rows(); ++r)
          for (std::size_t c = 0; c < p.cols(); ++c)
            gl.at(r, c) += (p.at(r, c) - (c == ys[r] ? Real{1} : Real{0})) * inv_b;
      });
}

}  // namespace pixeltext
