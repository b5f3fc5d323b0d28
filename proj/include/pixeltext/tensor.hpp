#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "pixeltext/error.hpp"

namespace pixeltext {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_size(const Shape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

inline std::string shape_string(const Shape& shape) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
  os << ']';
  return os.str();
}

/// Dense row-major array. There is no broadcasting anywhere in the library;
/// shapes must match exactly or be changed with an explicit reshape.
template <typename Real>
class Tensor {
 public:
  using value_type = Real;

  Tensor() = default;

  explicit Tensor(Shape shape, Real fill = Real{0})
      : shape_(std::move(shape)), data_(shape_size(shape_), fill) {
    for (auto d : shape_)
      if (d == 0) throw Error(ErrorKind::ShapeMismatch, "zero-length axis in " + shape_string(shape_));
  }

  Tensor(Shape shape, std::vector<Real> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_size(shape_))
      throw Error(ErrorKind::ShapeMismatch, "data length does not match " + shape_string(shape_));
  }

  static Tensor from(std::initializer_list<std::size_t> shape, std::initializer_list<Real> values) {
    return Tensor(Shape(shape), std::vector<Real>(values));
  }

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::span<Real> data() noexcept { return data_; }
  std::span<const Real> data() const noexcept { return data_; }
  std::vector<Real>& storage() noexcept { return data_; }
  const std::vector<Real>& storage() const noexcept { return data_; }

  Real& operator[](std::size_t i) noexcept { return data_[i]; }
  const Real& operator[](std::size_t i) const noexcept { return data_[i]; }

  // 2-D access; only valid on matrices.
  Real& at(std::size_t r, std::size_t c) noexcept { return data_[r * shape_[1] + c]; }
  const Real& at(std::size_t r, std::size_t c) const noexcept { return data_[r * shape_[1] + c]; }

  std::size_t rows() const { return shape_.at(0); }
  std::size_t cols() const { return shape_.at(1); }

  void fill(Real v) { std::fill(data_.begin(), data_.end(), v); }

  Tensor reshaped(Shape shape) const {
    if (shape_size(shape) != data_.size())
      throw Error(ErrorKind::ShapeMismatch,
                  "cannot reshape " + shape_string(shape_) + " to " + shape_string(shape));
    return Tensor(std::move(shape), data_);
  }

  template <typename Other>
  Tensor<Other> cast() const {
    return Tensor<Other>(shape_, std::vector<Other>(data_.begin(), data_.end()));
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  Shape shape_;
  std::vector<Real> data_;
};

inline void require_same_shape(const Shape& a, const Shape& b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + ": " + shape_string(a) + " vs " + shape_string(b));
}

inline void require_rank(const Shape& s, std::size_t rank, const char* what) {
  if (s.size() != rank)
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + ": expected rank " + std::to_string(rank) + ", got " +
                    shape_string(s));
}

namespace kernels {

// C[m x p] += A[m x k] * B[k x p]. Zero entries of A are skipped; after ReLU
// and dropout many activations are exactly zero.
template <typename Real>
void gemm_nn(std::size_t m, std::size_t k, std::size_t p, const Real* a, const Real* b, Real* c) {
  for (std::size_t i = 0; i < m; ++i) {
    Real* crow = c + i * p;
    const Real* arow = a + i * k;
    for (std::size_t t = 0; t < k; ++t) {
      const Real av = arow[t];
      if (av == Real{0}) continue;
      const Real* brow = b + t * p;
      for (std::size_t j = 0; j < p; ++j) crow[j] += av * brow[j];
    }
  }
}

// C[k x p] += A^T * B with A[m x k], B[m x p].
template <typename Real>
void gemm_tn(std::size_t m, std::size_t k, std::size_t p, const Real* a, const Real* b, Real* c) {
  for (std::size_t i = 0; i < m; ++i) {
    const Real* arow = a + i * k;
    const Real* brow = b + i * p;
    for (std::size_t t = 0; t < k; ++t) {
      const Real av = arow[t];
      if (av == Real{0}) continue;
      Real* crow = c + t * p;
      for (std::size_t j = 0; j < p; ++j) crow[j] += av * brow[j];
    }
  }
}

// C[m x k] += A * B^T with A[m x p], B[k x p]. Dot products use eight
// interleaved partial sums (a fixed order, so results stay reproducible) to
// give the compiler independent lanes.
template <typename Real>
void gemm_nt(std::size_t m, std::size_t k, std::size_t p, const Real* a, const Real* b, Real* c) {
  constexpr std::size_t lanes = 8;
  const std::size_t body = p - p % lanes;
  for (std::size_t i = 0; i < m; ++i) {
    const Real* arow = a + i * p;
    for (std::size_t t = 0; t < k; ++t) {
      const Real* brow = b + t * p;
      Real part[lanes] = {};
      for (std::size_t j = 0; j < body; j += lanes)
        for (std::size_t l = 0; l < lanes; ++l) part[l] += arow[j + l] * brow[j + l];
      Real acc{0};
      for (std::size_t l = 0; l < lanes; ++l) acc += part[l];
      for (std::size_t j = body; j < p; ++j) acc += arow[j] * brow[j];
      c[i * k + t] += acc;
    }
  }
}

}  // namespace kernels

}  // namespace pixeltext
