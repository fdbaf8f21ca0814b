#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubepaths {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact C(n, k); 0 for k < 0 or k > n. Valid for n <= 64.
std::uint64_t binom(int n, int k);

// e_n(x) = x (n - log2 x) for 0 < x <= 2^{n-1}, mirrored above, 0 at the ends.
double func_e(int n, std::uint64_t x);

// x = sum_{i=0}^{k} C(n,i) + alpha C(n,k+1) with alpha in [0,1), 0 < x <= 2^n.
struct LevelDecomposition {
  int n = 0;
  int k = 0;
  Rational alpha = 0;
};

LevelDecomposition level_decompose(int n, std::uint64_t x);

// b_n(x) = (1-alpha) C(n,k+1) + alpha C(n,k+2)
Rational func_b(int n, std::uint64_t x);

// s_n(x) = (1-alpha) C(n,k) + alpha C(n,k+1)
Rational func_s(int n, std::uint64_t x);

// C(x, r) = x (x-1) ... (x-r+1) / r! for real x.
double fractional_binomial(double x, int r);

// The unique x > r-1 with C(x, r) = m, to absolute tolerance 1e-9.
double solve_kk_threshold(std::uint64_t m, int r);

// min{e(a), e(b), 2^{n-1}}
double bl_edge_bound(int n, std::uint64_t a, std::uint64_t b);

// min{b(a), b(b)}
Rational bl_vertex_bound(int n, std::uint64_t a, std::uint64_t b);

std::string rational_to_string(const Rational& r);

}  // namespace cubepaths
