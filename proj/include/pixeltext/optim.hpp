#pragma once

#include <cmath>
#include <cstdint>

#include "pixeltext/tensor.hpp"

namespace pixeltext {

struct AdamConfig {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

template <typename Real>
struct AdamState {
  Tensor<Real> m;
  Tensor<Real> v;
  std::int64_t step = 0;

  AdamState() = default;
  explicit AdamState(const Shape& shape) : m(shape), v(shape) {}
};

/// One bias-corrected Adam update of `param` in place.
template <typename Real>
void adam_step(Tensor<Real>& param, const Tensor<Real>& grad, AdamState<Real>& state,
               const AdamConfig& cfg = {}) {
  require_same_shape(param.shape(), grad.shape(), "adam_step gradient");
  if (state.m.empty()) state = AdamState<Real>(param.shape());
  require_same_shape(param.shape(), state.m.shape(), "adam_step state");

  state.step += 1;
  const double t = static_cast<double>(state.step);
  const double m_correction = 1.0 - std::pow(cfg.beta1, t);
  const double v_correction = 1.0 - std::pow(cfg.beta2, t);
  // Moments are updated in double and stored as Real; 1 - beta2 is not
  // representable closely enough in float.
  for (std::size_t i = 0; i < param.size(); ++i) {
    const double g = grad[i];
    const double m = cfg.beta1 * double(state.m[i]) + (1.0 - cfg.beta1) * g;
    const double v = cfg.beta2 * double(state.v[i]) + (1.0 - cfg.beta2) * g * g;
    state.m[i] = static_cast<Real>(m);
    state.v[i] = static_cast<Real>(v);
    param[i] = static_cast<Real>(double(param[i]) - cfg.lr * (m / m_correction) / (std::sqrt(v / v_correction) + cfg.eps));
  }
}

}  // namespace pixeltext
