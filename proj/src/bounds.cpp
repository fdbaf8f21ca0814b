#include "cubepaths/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace cubepaths {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n > 64) throw std::invalid_argument("binom supports n <= 64");
  if (k > n - k) k = n - k;
  unsigned __int128 res = 1;
  for (int i = 1; i <= k; ++i) {
    res = res * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(res);
}

double func_e(int n, std::uint64_t x) {
  std::uint64_t total = std::uint64_t{1} << n;
  if (x > total) throw std::out_of_range("func_e argument exceeds 2^n");
  if (x == 0 || x == total) return 0.0;
  std::uint64_t y = (x <= total / 2) ? x : total - x;
  double yd = static_cast<double>(y);
  return yd * (n - std::log2(yd));
}

LevelDecomposition level_decompose(int n, std::uint64_t x) {
  std::uint64_t total = std::uint64_t{1} << n;
  if (x == 0 || x > total) throw std::out_of_range("level_decompose argument outside (0, 2^n]");
  std::uint64_t partial = 0;
  int k = 0;
  // Largest k with sum_{i=0}^{k} C(n,i) <= x.
  for (int i = 0; i <= n; ++i) {
    std::uint64_t next = partial + binom(n, i);
    if (next > x) break;
    partial = next;
    k = i;
  }
  LevelDecomposition d;
  d.n = n;
  d.k = k;
  std::uint64_t denom = binom(n, k + 1);
  d.alpha = denom == 0 ? Rational(0) : Rational(BigInt(x - partial), BigInt(denom));
  return d;
}

Rational func_b(int n, std::uint64_t x) {
  LevelDecomposition d = level_decompose(n, x);
  return (1 - d.alpha) * Rational(binom(n, d.k + 1)) + d.alpha * Rational(binom(n, d.k + 2));
}

Rational func_s(int n, std::uint64_t x) {
  LevelDecomposition d = level_decompose(n, x);
  return (1 - d.alpha) * Rational(binom(n, d.k)) + d.alpha * Rational(binom(n, d.k + 1));
}

double fractional_binomial(double x, int r) {
  if (r < 0) throw std::invalid_argument("fractional_binomial requires r >= 0");
  if (r == 0) return 1.0;
  double num = 1.0;
  for (int i = 0; i < r; ++i) num *= (x - i);
  double fact = 1.0;
  for (int i = 2; i <= r; ++i) fact *= i;
  return num / fact;
}

double solve_kk_threshold(std::uint64_t m, int r) {
  if (r < 1 || m < 1) throw std::invalid_argument("solve_kk_threshold requires r >= 1, m >= 1");
  double lo = r - 1.0;
  double hi = static_cast<double>(r);
  while (fractional_binomial(hi, r) < static_cast<double>(m)) {
    hi = lo + 2.0 * (hi - lo);
    if (hi > 1e18) throw std::runtime_error("solve_kk_threshold bracket failure");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (fractional_binomial(mid, r) < static_cast<double>(m)) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double bl_edge_bound(int n, std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1 || a + b > (std::uint64_t{1} << n)) {
    throw std::out_of_range("bl_edge_bound requires a, b >= 1 and a + b <= 2^n");
  }
  double half = static_cast<double>(std::uint64_t{1} << (n - 1));
  return std::min({func_e(n, a), func_e(n, b), half});
}

Rational bl_vertex_bound(int n, std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1 || a + b > (std::uint64_t{1} << n)) {
    throw std::out_of_range("bl_vertex_bound requires a, b >= 1 and a + b <= 2^n");
  }
  Rational ba = func_b(n, a);
  Rational bb = func_b(n, b);
  return ba < bb ? ba : bb;
}

std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace cubepaths
