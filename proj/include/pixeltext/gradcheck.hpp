#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>

#include "pixeltext/autodiff.hpp"

namespace pixeltext {

/// Scalar objective built on a fresh tape from one input variable.
template <typename F, typename Real>
concept TapeObjective = requires(F f, Tape<Real>& tape, Var<Real> x) {
  { f(tape, x) } -> std::same_as<Var<Real>>;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::size_t worst_index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
};

/// Compares reverse-mode gradients against central differences
/// (f(x + h e_i) - f(x - h e_i)) / 2h, coordinate by coordinate.
/// Relative error is |a - n| / max(|a|, |n|, 1e-8).
///
/// A 32-bit check whose objective also accepts a 64-bit tape takes the
/// analytic gradient from the 32-bit tape and the difference quotient from the
/// 64-bit one (at the same 32-bit probe points). Otherwise the rounding of the
/// scalar output, not the backward pass, sets the error floor.
template <typename Real, TapeObjective<Real> F>
GradCheckResult grad_check(F&& f, const Tensor<Real>& x, double h) {
  Tensor<Real> analytic;
  {
    Tape<Real> tape;
    auto xv = tape.variable(x);
    auto loss = f(tape, xv);
    tape.backward(loss);
    analytic = tape.grad(xv.id);
  }
  auto eval = [&](const Tensor<Real>& at) {
    if constexpr (!std::same_as<Real, double> && TapeObjective<F, double>) {
      Tape<double> tape;
      auto xv = tape.variable(at.template cast<double>());
      return f(tape, xv).value()[0];
    } else {
      Tape<Real> tape;
      auto xv = tape.variable(at);
      return static_cast<double>(f(tape, xv).value()[0]);
    }
  };

  GradCheckResult result;
  Tensor<Real> probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real saved = probe[i];
    const Real hi = static_cast<Real>(saved + h);
    const Real lo = static_cast<Real>(saved - h);
    probe[i] = hi;
    const double up = eval(probe);
    probe[i] = lo;
    const double down = eval(probe);
    probe[i] = saved;
    // Divide by the step actually taken after rounding to Real.
    const double numeric = (up - down) / (double(hi) - double(lo));
    const double a = analytic[i];
    const double denom = std::max({std::abs(a), std::abs(numeric), 1e-8});
    const double err = std::abs(a - numeric) / denom;
    if (i == 0 || err > result.max_rel_error) result = {err, i, a, numeric};
  }
  return result;
}

}  // namespace pixeltext
