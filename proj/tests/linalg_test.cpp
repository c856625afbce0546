#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "steplab/linalg.hpp"
#include "steplab/rng.hpp"

using namespace steplab;

TEST_CASE("l2_norm known values") {
  CHECK(l2_norm(Vec{3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(l2_norm(Vec{0.0, 0.0, 0.0}) == 0.0);
  CHECK(l2_norm(Vec{1.0, 1.0, 1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(l2_norm(Vec{}), std::invalid_argument);
}

TEST_CASE("l2_norm absolute homogeneity") {
  SeededRng rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const Vec v = rng.normal_vec(1 + rng.uniform_index(20));
    const double c = rng.uniform(-5.0, 5.0);
    Vec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = c * v[i];
    CHECK(l2_norm(scaled) ==
          doctest::Approx(std::abs(c) * l2_norm(v)).epsilon(1e-14));
  }
}

TEST_CASE("signv") {
  const Vec out = signv(Vec{2.5, -0.1, 0.0});
  CHECK(out == Vec{1.0, -1.0, 0.0});
  CHECK(signv(Vec{0.0, 0.0}) == Vec{0.0, 0.0});
  CHECK(signv(Vec{-7.0}) == Vec{-1.0});
}

TEST_CASE("signv idempotent") {
  SeededRng rng(12);
  for (int rep = 0; rep < 30; ++rep) {
    Vec v = rng.normal_vec(8);
    v[rng.uniform_index(8)] = 0.0;
    CHECK(signv(signv(v)) == signv(v));
  }
}

TEST_CASE("ema scalars") {
  CHECK(ema(0.0, 2.0, 0.9) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(ema(1.0, 1.0, 0.9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ema(1.0, 0.0, 0.5) == 0.5);
  CHECK_THROWS_AS(ema(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ema(0.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("ema beta=0 returns x exactly") {
  SeededRng rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const double prev = rng.normal();
    const double x = rng.normal();
    CHECK(ema(prev, x, 0.0) == x);
  }
}

TEST_CASE("ema converges geometrically to a constant input") {
  const double beta = 0.8;
  const double x = 3.0;
  double state = -1.0;
  double err = std::abs(state - x);
  for (int k = 0; k < 40; ++k) {
    state = ema(state, x, beta);
    const double new_err = std::abs(state - x);
    CHECK(new_err == doctest::Approx(beta * err).epsilon(1e-12));
    err = new_err;
  }
  CHECK(err < 1e-3);
}

TEST_CASE("ema on vectors") {
  const Vec out = ema(Vec{0.0, 1.0}, Vec{2.0, 1.0}, 0.9);
  CHECK(out[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(ema(Vec{1.0}, Vec{1.0, 2.0}, 0.5), std::invalid_argument);
}

TEST_CASE("cosine_between") {
  CHECK(cosine_between(Vec{1, 0}, Vec{0, 1}) == 0.0);
  CHECK(cosine_between(Vec{2, 1}, Vec{2, 1}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cosine_between(Vec{1, 0}, Vec{-2, 0}) == -1.0);
  CHECK_THROWS_AS(cosine_between(Vec{0, 0}, Vec{1, 0}), std::invalid_argument);
}

TEST_CASE("cosine stays clamped under rounding") {
  SeededRng rng(14);
  for (int rep = 0; rep < 100; ++rep) {
    const Vec a = rng.normal_vec(4);
    Vec b(a);
    for (auto& x : b) x *= 1e-8;  // nearly parallel after scaling
    const double c = cosine_between(a, b);
    CHECK(c <= 1.0);
    CHECK(c >= -1.0);
  }
}

TEST_CASE("matrix products agree with naive expansions") {
  Mat a(2, 3);
  a.data = {1, 2, 3, 4, 5, 6};
  Mat b(3, 2);
  b.data = {7, 8, 9, 10, 11, 12};
  const Mat c = matmul(a, b);
  CHECK(c.rows == 2);
  CHECK(c.cols == 2);
  CHECK(c(0, 0) == 58);
  CHECK(c(0, 1) == 64);
  CHECK(c(1, 0) == 139);
  CHECK(c(1, 1) == 154);

  const Vec y = mat_vec(a, Vec{1, 1, 1});
  CHECK(y == Vec{6, 15});
  const Vec z = mat_tvec(a, Vec{1, 1});
  CHECK(z == Vec{5, 7, 9});
  CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
}
