// SPDX-License-Identifier: Apache-2.0
#include "gnncg/tensor.hpp"

#include <fstream>

namespace gnncg {

template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.cols != b.rows) throw TensorError("matmul: inner dimension mismatch");
  Tensor<T> c(a.rows, b.cols);
  const std::int64_t rows = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const T* pa = a.row(i);
    T* pc = c.row(i);
    for (std::uint64_t k = 0; k < a.cols; ++k) {
      const T aik = pa[k];
      const T* pb = b.row(k);
      for (std::uint64_t j = 0; j < b.cols; ++j) pc[j] += aik * pb[j];
    }
  }
  return c;
}

template <typename T>
Tensor<T> matmul_nt(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.cols != b.cols) throw TensorError("matmul_nt: inner dimension mismatch");
  Tensor<T> c(a.rows, b.rows);
  const std::int64_t rows = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const T* pa = a.row(i);
    T* pc = c.row(i);
    for (std::uint64_t j = 0; j < b.rows; ++j) {
      const T* pb = b.row(j);
      T acc = T(0);
      for (std::uint64_t k = 0; k < a.cols; ++k) acc += pa[k] * pb[k];
      pc[j] = acc;
    }
  }
  return c;
}

template <typename T>
Tensor<T> matmul_tn(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.rows != b.rows) throw TensorError("matmul_tn: inner dimension mismatch");
  Tensor<T> c(a.cols, b.cols);
  const std::int64_t out_rows = static_cast<std::int64_t>(a.cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < out_rows; ++i) {
    T* pc = c.row(i);
    for (std::uint64_t k = 0; k < a.rows; ++k) {
      const T aki = a.at(k, static_cast<std::uint64_t>(i));
      const T* pb = b.row(k);
      for (std::uint64_t j = 0; j < b.cols; ++j) pc[j] += aki * pb[j];
    }
  }
  return c;
}

template Tensor<double> matmul(const Tensor<double>&, const Tensor<double>&);
template Tensor<float> matmul(const Tensor<float>&, const Tensor<float>&);
template Tensor<double> matmul_nt(const Tensor<double>&, const Tensor<double>&);
template Tensor<float> matmul_nt(const Tensor<float>&, const Tensor<float>&);
template Tensor<double> matmul_tn(const Tensor<double>&, const Tensor<double>&);
template Tensor<float> matmul_tn(const Tensor<float>&, const Tensor<float>&);

void dump_tensor(const TensorD& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TensorError("cannot open for write: " + path);
  const std::uint64_t dims[2] = {t.rows, t.cols};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  out.write(reinterpret_cast<const char*>(t.data.data()),
            static_cast<std::streamsize>(t.size() * sizeof(double)));
}

TensorD load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TensorError("cannot open for read: " + path);
  std::uint64_t dims[2] = {0, 0};
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  if (!in) throw TensorError("truncated tensor file: " + path);
  TensorD t(dims[0], dims[1]);
  in.read(reinterpret_cast<char*>(t.data.data()),
          static_cast<std::streamsize>(t.size() * sizeof(double)));
  if (!in) throw TensorError("truncated tensor file: " + path);
  return t;
}

}  // namespace gnncg
