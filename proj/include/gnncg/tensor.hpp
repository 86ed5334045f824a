// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnncg {

struct TensorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix. Rows are keyed by vertex id, edge id, or parameter
/// row depending on use; multi-head features are flattened head-major into
/// cols = heads * width.
template <typename T>
struct Tensor {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::vector<T> data;

  Tensor() = default;
  Tensor(std::uint64_t r, std::uint64_t c, T fill = T(0)) : rows(r), cols(c), data(r * c, fill) {}

  T& at(std::uint64_t r, std::uint64_t c) { return data[r * cols + c]; }
  const T& at(std::uint64_t r, std::uint64_t c) const { return data[r * cols + c]; }
  T* row(std::uint64_t r) { return data.data() + r * cols; }
  const T* row(std::uint64_t r) const { return data.data() + r * cols; }
  std::uint64_t size() const { return rows * cols; }
  bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }
};

using TensorD = Tensor<double>;
using TensorF = Tensor<float>;

enum class InitDist { kUniform, kZeros, kOnes };

/// Deterministic for a fixed seed; uniform draws from (-s, s) with
/// s = 1/sqrt(cols).
template <typename T>
Tensor<T> init_seeded(std::uint64_t rows, std::uint64_t cols, std::uint64_t seed,
                      InitDist dist = InitDist::kUniform) {
  Tensor<T> t(rows, cols);
  switch (dist) {
    case InitDist::kZeros:
      break;
    case InitDist::kOnes:
      for (auto& x : t.data) x = T(1);
      break;
    case InitDist::kUniform: {
      std::mt19937_64 rng(seed);
      const double s = cols == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(cols));
      std::uniform_real_distribution<double> unif(-s, s);
      for (auto& x : t.data) x = static_cast<T>(unif(rng));
      break;
    }
  }
  return t;
}

enum class UnaryOp { kCopy, kNeg, kExp, kRelu, kLeakyRelu, kSigmoid };
enum class BinaryOp { kAdd, kSub, kMul, kDiv };

template <typename T>
T apply_unary(UnaryOp op, T x, T alpha) {
  switch (op) {
    case UnaryOp::kCopy: return x;
    case UnaryOp::kNeg: return -x;
    case UnaryOp::kExp: return std::exp(x);
    case UnaryOp::kRelu: return x > T(0) ? x : T(0);
    case UnaryOp::kLeakyRelu: return x > T(0) ? x : alpha * x;
    case UnaryOp::kSigmoid: return T(1) / (T(1) + std::exp(-x));
  }
  return x;
}

template <typename T>
T apply_binary(BinaryOp op, T a, T b) {
  switch (op) {
    case BinaryOp::kAdd: return a + b;
    case BinaryOp::kSub: return a - b;
    case BinaryOp::kMul: return a * b;
    case BinaryOp::kDiv: return a / b;
  }
  return a;
}

template <typename T>
Tensor<T> unary(UnaryOp op, const Tensor<T>& in, T alpha = T(0.2)) {
  Tensor<T> out(in.rows, in.cols);
  for (std::uint64_t i = 0; i < in.size(); ++i) out.data[i] = apply_unary(op, in.data[i], alpha);
  return out;
}

/// Row count must match; the narrower operand is broadcast within rows when
/// the wide width is a multiple of the narrow width (head-major layout:
/// wide column j maps to narrow column j / (wide/narrow)).
template <typename T>
Tensor<T> binary(BinaryOp op, const Tensor<T>& a, const Tensor<T>& b) {
  if (a.rows != b.rows) throw TensorError("binary: row mismatch");
  const std::uint64_t wide = std::max(a.cols, b.cols);
  const std::uint64_t narrow = std::min(a.cols, b.cols);
  if (narrow == 0 || wide % narrow != 0) throw TensorError("binary: incompatible widths");
  const std::uint64_t group = wide / narrow;
  Tensor<T> out(a.rows, wide);
  for (std::uint64_t r = 0; r < a.rows; ++r) {
    const T* pa = a.row(r);
    const T* pb = b.row(r);
    T* po = out.row(r);
    for (std::uint64_t j = 0; j < wide; ++j) {
      const T x = a.cols == wide ? pa[j] : pa[j / group];
      const T y = b.cols == wide ? pb[j] : pb[j / group];
      po[j] = apply_binary(op, x, y);
    }
  }
  return out;
}

/// C = A * B. Parallel over rows of A; per-row accumulation is serial, so the
/// result is deterministic for any worker count.
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b);

/// C = A * B^T  (b given as cols x inner).
template <typename T>
Tensor<T> matmul_nt(const Tensor<T>& a, const Tensor<T>& b);

/// C = A^T * B  (a given as inner x rows).
template <typename T>
Tensor<T> matmul_tn(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
bool all_finite(const Tensor<T>& t) {
  for (const T& x : t.data) {
    if (!std::isfinite(static_cast<double>(x))) return false;
  }
  return true;
}

template <typename T>
void check_finite(const Tensor<T>& t, const std::string& context) {
  if (!all_finite(t)) throw TensorError("non-finite value in " + context);
}

/// Binary dump: two little-endian u64 dims followed by f64 values, row-major.
void dump_tensor(const TensorD& t, const std::string& path);
TensorD load_tensor(const std::string& path);

/// max(1, |a|, |b|)-relative difference used by every tolerance check.
inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

template <typename T>
double max_rel_err(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    m = std::max(m, rel_err(static_cast<double>(a.data[i]), static_cast<double>(b.data[i])));
  }
  return m;
}

}  // namespace gnncg
