#include <doctest.h>

#include <stdexcept>

#include <bit>
#include <cmath>
#include <random>

#include "cubepaths/boundary.hpp"
#include "cubepaths/bounds.hpp"

using namespace cubepaths;

TEST_CASE("binomials") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(64, 32) == 1832624140942590534ull);
  CHECK_THROWS_AS(binom(65, 1), std::invalid_argument);
}

TEST_CASE("func_e spot values") {
  CHECK(func_e(4, 4) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(func_e(4, 8) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(func_e(4, 12) == doctest::Approx(8.0).epsilon(1e-12));  // e(3 * 2^{n-2})
  CHECK(func_e(3, 3) == doctest::Approx(3.0 * (3.0 - std::log2(3.0))).epsilon(1e-12));
  CHECK(func_e(5, 0) == 0.0);
  CHECK(func_e(5, 32) == 0.0);
  CHECK_THROWS_AS(func_e(3, 9), std::out_of_range);

  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(func_e(n, std::uint64_t{1} << k) ==
            doctest::Approx(double(n - k) * double(std::uint64_t{1} << k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("e symmetry") {
  for (int n : {2, 5, 10, 16, 20}) {
    std::uint64_t total = std::uint64_t{1} << n;
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 2000; ++trial) {
      std::uint64_t x = rng() % (total + 1);
      REQUIRE(std::abs(func_e(n, x) - func_e(n, total - x)) <= 1e-9 * (1.0 + func_e(n, x)));
    }
  }
}

TEST_CASE("e monotone on integers up to 2^n / exp(1)") {
  for (int n = 2; n <= 16; ++n) {
    std::uint64_t limit = std::uint64_t(double(std::uint64_t{1} << n) / std::exp(1.0));
    double prev = func_e(n, 1);
    for (std::uint64_t x = 2; x <= limit; ++x) {
      double cur = func_e(n, x);
      REQUIRE(cur >= prev - 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("level decomposition") {
  LevelDecomposition d1 = level_decompose(4, 5);
  CHECK(d1.k == 1);
  CHECK(d1.alpha == 0);

  LevelDecomposition d2 = level_decompose(4, 8);
  CHECK(d2.k == 1);
  CHECK(d2.alpha == Rational(1, 2));

  LevelDecomposition d3 = level_decompose(4, 1);
  CHECK(d3.k == 0);
  CHECK(d3.alpha == 0);

  CHECK_THROWS_AS(level_decompose(4, 0), std::out_of_range);
  CHECK_THROWS_AS(level_decompose(4, 17), std::out_of_range);

  // Reconstruction, exhaustive for several n.
  for (int n : {1, 3, 6, 10}) {
    for (std::uint64_t x = 1; x <= (std::uint64_t{1} << n); ++x) {
      LevelDecomposition d = level_decompose(n, x);
      Rational rebuilt = 0;
      for (int i = 0; i <= d.k; ++i) rebuilt += Rational(binom(n, i));
      rebuilt += d.alpha * Rational(binom(n, d.k + 1));
      REQUIRE(rebuilt == Rational(x));
      REQUIRE(d.alpha >= 0);
      REQUIRE(d.alpha < 1);
    }
  }
}

TEST_CASE("func_b and func_s spot values") {
  CHECK(func_b(4, 5) == Rational(6));
  CHECK(func_b(4, 8) == Rational(5));
  CHECK(func_s(4, 5) == Rational(4));
  CHECK(func_s(4, 8) == Rational(5));
  // b at a full level prefix equals the next binomial
  for (int n = 2; n <= 10; ++n) {
    std::uint64_t x = 0;
    for (int k = 0; k < n; ++k) {
      x += binom(n, k);
      CHECK(func_b(n, x) == Rational(binom(n, k + 1)));
    }
  }
}

TEST_CASE("b monotone up to the half-level prefix, then decreasing") {
  for (int n = 2; n <= 12; ++n) {
    std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t turn = 0;
    for (int i = 0; i <= (n + 1) / 2 - 1; ++i) turn += binom(n, i);
    Rational best = func_b(n, 1);
    Rational prev = best;
    for (std::uint64_t x = 2; x <= total; ++x) {
      Rational cur = func_b(n, x);
      if (x <= turn) REQUIRE(cur >= prev);
      if (x > turn) REQUIRE(cur <= prev);
      if (cur > best) best = cur;
      prev = cur;
    }
    REQUIRE(func_b(n, turn) == best);  // the maximum is attained at the turning prefix
  }
}

TEST_CASE("b and s coupling at full level prefixes") {
  for (int n = 2; n <= 12; ++n) {
    std::uint64_t x = 1;  // sum_{i=0}^{0}
    for (int k = 1; k <= n; ++k) {
      x += binom(n, k);
      Rational s = func_s(n, x);
      REQUIRE(s == Rational(binom(n, k)));
      std::uint64_t rest = x - binom(n, k);
      REQUIRE(func_b(n, rest) == s);
    }
  }
}

TEST_CASE("fractional binomial and threshold solver") {
  CHECK(fractional_binomial(4.0, 3) == doctest::Approx(4.0));
  CHECK(fractional_binomial(2.0, 3) == doctest::Approx(0.0));
  CHECK(std::abs(solve_kk_threshold(4, 3) - 4.0) <= 1e-9);
  CHECK(std::abs(solve_kk_threshold(3, 2) - 3.0) <= 1e-9);
  CHECK(std::abs(solve_kk_threshold(1, 5) - 5.0) <= 1e-9);
  CHECK_THROWS_AS(solve_kk_threshold(0, 2), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    int r = 1 + int(rng() % 6);
    std::uint64_t m = 1 + rng() % 100000;
    double x = solve_kk_threshold(m, r);
    REQUIRE(x > r - 1);
    REQUIRE(std::abs(fractional_binomial(x, r) - double(m)) <= 1e-5 * double(m));
  }
}

TEST_CASE("lovasz shadow bound on random level families") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 1000 / n; ++trial) {
      int r = 1 + int(rng() % n);
      CubeSet a(n);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (std::popcount(m) == r && (rng() & 1)) a.insert(static_cast<std::uint32_t>(m));
      }
      if (a.empty()) continue;
      double x = solve_kk_threshold(a.size(), r);
      REQUIRE(double(lower_shadow(a).size()) >= fractional_binomial(x, r - 1) - 1e-9);
    }
  }
}

TEST_CASE("combined bounds") {
  CHECK(bl_edge_bound(4, 4, 4) == doctest::Approx(8.0));
  CHECK(bl_edge_bound(2, 1, 1) == doctest::Approx(2.0));
  CHECK(bl_vertex_bound(4, 5, 5) == Rational(6));
  CHECK_THROWS_AS(bl_edge_bound(2, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(bl_vertex_bound(2, 3, 3), std::out_of_range);
}

TEST_CASE("rational formatting") {
  CHECK(rational_to_string(Rational(6)) == "6/1");
  CHECK(rational_to_string(Rational(5, 2)) == "5/2");
}
