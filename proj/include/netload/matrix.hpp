// Copyright 2026 The netload Authors. Apache 2.0 License.
//
// Dense row-major double matrix plus the small kernel set the models need:
// GEMM variants, elementwise maps, reductions, and a central-difference
// gradient used to verify every hand-derived backward pass.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netload {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }
  Matrix(int rows, int cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("Matrix: data length does not match rows*cols");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }
  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + a.shape_str() +
                                " vs " + b.shape_str());
}

// out = a*b, or out += a*b when accumulate is set. out must be preshaped.
inline void matmul_into(const Matrix& a, const Matrix& b, Matrix& out, bool accumulate = false) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: dimension mismatch (" + a.shape_str() + ")*(" +
                                b.shape_str() + ")");
  if (out.rows() != a.rows() || out.cols() != b.cols())
    throw std::invalid_argument("matmul: bad output shape " + out.shape_str());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  for (int i = 0; i < m; ++i) {
    double* c = out.row(i);
    if (!accumulate)
      for (int j = 0; j < n; ++j) c[j] = 0.0;
    const double* ar = a.row(i);
    for (int p = 0; p < k; ++p) {
      const double av = ar[p];
      const double* br = b.row(p);
      for (int j = 0; j < n; ++j) c[j] += av * br[j];
    }
  }
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  matmul_into(a, b, out);
  return out;
}

// out (+)= a^T * b  with a: m x k, b: m x n, out: k x n
inline void matmul_atb_into(const Matrix& a, const Matrix& b, Matrix& out,
                            bool accumulate = false) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("matmul_atb: dimension mismatch (" + a.shape_str() + ")^T*(" +
                                b.shape_str() + ")");
  if (out.rows() != a.cols() || out.cols() != b.cols())
    throw std::invalid_argument("matmul_atb: bad output shape " + out.shape_str());
  if (!accumulate) out.fill(0.0);
  const int m = a.rows(), k = a.cols(), n = b.cols();
  for (int i = 0; i < m; ++i) {
    const double* ar = a.row(i);
    const double* br = b.row(i);
    for (int p = 0; p < k; ++p) {
      const double av = ar[p];
      double* c = out.row(p);
      for (int j = 0; j < n; ++j) c[j] += av * br[j];
    }
  }
}

// out (+)= a * b^T  with a: m x k, b: n x k, out: m x n
inline void matmul_abt_into(const Matrix& a, const Matrix& b, Matrix& out,
                            bool accumulate = false) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("matmul_abt: dimension mismatch (" + a.shape_str() + ")*(" +
                                b.shape_str() + ")^T");
  if (out.rows() != a.rows() || out.cols() != b.rows())
    throw std::invalid_argument("matmul_abt: bad output shape " + out.shape_str());
  const int m = a.rows(), k = a.cols(), n = b.rows();
  for (int i = 0; i < m; ++i) {
    const double* ar = a.row(i);
    double* c = out.row(i);
    for (int j = 0; j < n; ++j) {
      const double* br = b.row(j);
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc += ar[p] * br[p];
      if (accumulate)
        c[j] += acc;
      else
        c[j] = acc;
    }
  }
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline void add_inplace(Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t i = 0; i < a.size(); ++i) pa[i] += pb[i];
}

inline void scale_inplace(Matrix& a, double s) {
  for (double& v : a.values()) v *= s;
}

inline void hadamard_inplace(Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hadamard");
  double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t i = 0; i < a.size(); ++i) pa[i] *= pb[i];
}

// x += b for every row of x; b is 1 x cols
inline void add_row_broadcast(Matrix& x, const Matrix& b) {
  if (b.rows() != 1 || b.cols() != x.cols())
    throw std::invalid_argument("add_row_broadcast: bias shape " + b.shape_str() +
                                " does not match " + x.shape_str());
  const double* pb = b.row(0);
  for (int i = 0; i < x.rows(); ++i) {
    double* px = x.row(i);
    for (int j = 0; j < x.cols(); ++j) px[j] += pb[j];
  }
}

// 1 x cols vector of column sums, optionally accumulated into out.
inline void col_sums_into(const Matrix& a, Matrix& out, bool accumulate = false) {
  if (out.rows() != 1 || out.cols() != a.cols())
    throw std::invalid_argument("col_sums: bad output shape " + out.shape_str());
  if (!accumulate) out.fill(0.0);
  double* po = out.row(0);
  for (int i = 0; i < a.rows(); ++i) {
    const double* pa = a.row(i);
    for (int j = 0; j < a.cols(); ++j) po[j] += pa[j];
  }
}

// --- scalar activations -----------------------------------------------------

// Branch on sign so exp never overflows.
inline double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// tanh written through a single exp; algebraically exact and saturates
// cleanly at +-1 for large |x|.
inline double tanh_fn(double x) {
  return 1.0 - 2.0 / (std::exp(2.0 * x) + 1.0);
}

inline double sigmoid_deriv(double x) {
  const double s = sigmoid(x);
  return s * (1.0 - s);
}

inline double tanh_deriv(double x) {
  const double t = tanh_fn(x);
  return 1.0 - t * t;
}

enum class Unary { Sigmoid, Tanh, SigmoidDeriv, TanhDeriv };

inline Matrix map_elementwise(const Matrix& m, Unary f) {
  Matrix out(m.rows(), m.cols());
  const double* pi = m.data();
  double* po = out.data();
  switch (f) {
    case Unary::Sigmoid:
      for (std::size_t i = 0; i < m.size(); ++i) po[i] = sigmoid(pi[i]);
      break;
    case Unary::Tanh:
      for (std::size_t i = 0; i < m.size(); ++i) po[i] = tanh_fn(pi[i]);
      break;
    case Unary::SigmoidDeriv:
      for (std::size_t i = 0; i < m.size(); ++i) po[i] = sigmoid_deriv(pi[i]);
      break;
    case Unary::TanhDeriv:
      for (std::size_t i = 0; i < m.size(); ++i) po[i] = tanh_deriv(pi[i]);
      break;
  }
  return out;
}

// --- gradient oracle ----------------------------------------------------------

// Central differences (f(x+eps*e_i) - f(x-eps*e_i)) / (2 eps) per entry.
template <class LossFn>
Matrix finite_difference_grad(LossFn&& loss_fn, const Matrix& params, double eps = 1e-5) {
  if (!(eps > 0.0)) throw std::invalid_argument("finite_difference_grad: eps must be > 0");
  Matrix probe = params;
  Matrix grad(params.rows(), params.cols());
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double saved = probe.values()[i];
    probe.values()[i] = saved + eps;
    const double up = loss_fn(static_cast<const Matrix&>(probe));
    probe.values()[i] = saved - eps;
    const double down = loss_fn(static_cast<const Matrix&>(probe));
    probe.values()[i] = saved;
    grad.values()[i] = (up - down) / (2.0 * eps);
  }
  return grad;
}

inline double rel_error(double a, double b) {
  const double denom = std::max(std::max(std::fabs(a), std::fabs(b)), 1e-8);
  return std::fabs(a - b) / denom;
}

}  // namespace netload
