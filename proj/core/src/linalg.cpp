#include "steplab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steplab {

double l2_norm(const double* v, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("l2_norm: empty vector");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += v[i] * v[i];
  }
  return std::sqrt(sum);
}

double l2_norm(const Vec& v) { return l2_norm(v.data(), v.size()); }

double frobenius_norm(const Mat& m) { return l2_norm(m.data.data(), m.size()); }

double dot(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  return dot(a.data(), b.data(), a.size());
}

double sign_of(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

Vec signv(const Vec& v) {
  Vec out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), sign_of);
  return out;
}

double ema(double prev, double x, double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("ema: beta must be in [0, 1)");
  }
  return beta * prev + (1.0 - beta) * x;
}

Vec ema(const Vec& prev, const Vec& x, double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("ema: beta must be in [0, 1)");
  }
  if (prev.size() != x.size()) {
    throw std::invalid_argument("ema: length mismatch");
  }
  Vec out(prev.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    out[i] = beta * prev[i] + (1.0 - beta) * x[i];
  }
  return out;
}

double cosine_between(const Vec& a, const Vec& b) {
  const double na = l2_norm(a);
  const double nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("cosine_between: zero-norm input");
  }
  const double c = dot(a, b) / (na * nb);
  return std::clamp(c, -1.0, 1.0);
}

bool all_finite(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const Mat& m) { return all_finite(m.data); }

Vec mat_tvec(const Mat& m, const Vec& x) {
  if (x.size() != m.rows) {
    throw std::invalid_argument("mat_tvec: shape mismatch");
  }
  Vec y(m.cols, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    const double xr = x[r];
    const double* row = m.row_ptr(r);
    for (std::size_t c = 0; c < m.cols; ++c) {
      y[c] += xr * row[c];
    }
  }
  return y;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  if (x.size() != m.cols) {
    throw std::invalid_argument("mat_vec: shape mismatch");
  }
  Vec y(m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    y[r] = dot(m.row_ptr(r), x.data(), m.cols);
  }
  return y;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) {
    throw std::invalid_argument("matmul: inner dimension mismatch");
  }
  Mat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row_ptr(i);
    double* crow = c.row_ptr(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = arow[k];
      const double* brow = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols; ++j) {
        crow[j] += aik * brow[j];
      }
    }
  }
  return c;
}

Mat matmul_tn(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) {
    throw std::invalid_argument("matmul_tn: inner dimension mismatch");
  }
  Mat c(a.cols, b.cols);
  for (std::size_t k = 0; k < a.rows; ++k) {
    const double* arow = a.row_ptr(k);
    const double* brow = b.row_ptr(k);
    for (std::size_t i = 0; i < a.cols; ++i) {
      const double aki = arow[i];
      double* crow = c.row_ptr(i);
      for (std::size_t j = 0; j < b.cols; ++j) {
        crow[j] += aki * brow[j];
      }
    }
  }
  return c;
}

Mat matmul_nt(const Mat& a, const Mat& b) {
  if (a.cols != b.cols) {
    throw std::invalid_argument("matmul_nt: inner dimension mismatch");
  }
  Mat c(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row_ptr(i);
    double* crow = c.row_ptr(i);
    for (std::size_t j = 0; j < b.rows; ++j) {
      crow[j] = dot(arow, b.row_ptr(j), a.cols);
    }
  }
  return c;
}

void require_same_shape(const Mat& a, const Mat& b, const std::string& what) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument(what + ": shape mismatch");
  }
}

}  // namespace steplab
