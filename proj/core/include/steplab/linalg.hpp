#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace steplab {

/// Dense double-precision vector. All library math runs in 64-bit floats.
using Vec = std::vector<double>;

/// Dense row-major matrix.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}
  Mat(std::size_t r, std::size_t c, std::vector<double> values)
      : rows(r), cols(c), data(std::move(values)) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::size_t size() const { return data.size(); }

  double* row_ptr(std::size_t r) { return data.data() + r * cols; }
  const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }

  /// Copy of row r as a Vec.
  Vec row(std::size_t r) const {
    return Vec(row_ptr(r), row_ptr(r) + cols);
  }
};

/// sqrt(sum v_i^2). Throws std::invalid_argument on an empty vector.
double l2_norm(const Vec& v);
double l2_norm(const double* v, std::size_t n);

/// Frobenius norm.
double frobenius_norm(const Mat& m);

double dot(const Vec& a, const Vec& b);
double dot(const double* a, const double* b, std::size_t n);

/// Elementwise sign: +1 for positive, -1 for negative, 0 for zero.
Vec signv(const Vec& v);
double sign_of(double x);

/// beta * prev + (1 - beta) * x with beta in [0, 1).
double ema(double prev, double x, double beta);
Vec ema(const Vec& prev, const Vec& x, double beta);

/// <a,b> / (|a||b|), clamped to [-1, 1] against rounding.
/// Throws std::invalid_argument if either norm is zero.
double cosine_between(const Vec& a, const Vec& b);

/// True if every entry is finite.
bool all_finite(const Vec& v);
bool all_finite(const Mat& m);

/// y = M^T x for M (rows x cols), x of length rows; result length cols.
Vec mat_tvec(const Mat& m, const Vec& x);
/// y = M x for M (rows x cols), x of length cols; result length rows.
Vec mat_vec(const Mat& m, const Vec& x);

/// C = A * B. A is (m x k), B is (k x n).
Mat matmul(const Mat& a, const Mat& b);
/// C = A^T * B. A is (k x m), B is (k x n).
Mat matmul_tn(const Mat& a, const Mat& b);
/// C = A * B^T. A is (m x k), B is (n x k).
Mat matmul_nt(const Mat& a, const Mat& b);

void require_same_shape(const Mat& a, const Mat& b, const std::string& what);

}  // namespace steplab
