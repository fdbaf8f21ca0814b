#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cubepaths/cube_set.hpp"

namespace cubepaths {

enum class BoundaryMode { edge, vertex };

// C_i(S) = {x in S : x minus {i} in S};  D_i(S) = S union {x : x union {i} in S}.
// Both results are i-down and preserve j-downness.
CubeSet compress_C(const CubeSet& s, int i);
CubeSet compress_D(const CubeSet& s, int i);

// Directed boundary size of the chosen kind.
std::uint64_t directed_boundary_size(const CubeSet& s, BoundaryMode mode);

struct CompressionGap {
  std::int64_t gain_D = 0;  // |db(S)| - |db(D_i(S))|
  std::int64_t gain_C = 0;  // |db(S)| - |db(C_i(S))|
};

// At least one gain is non-negative, and gain_D + gain_C >= 0 (the averaged
// inequality 2|db(S)| >= |db(D_i(S))| + |db(C_i(S))|).
CompressionGap compression_gap(const CubeSet& s, int i, BoundaryMode mode);

struct CompressionStep {
  int i = 0;
  char choice = 'C';  // 'C' or 'D'
  std::uint64_t boundary_before = 0;
  std::uint64_t boundary_after = 0;
  BoundaryMode mode = BoundaryMode::edge;
};

// Single ascending pass i = 1..n choosing, per coordinate, an operator with
// non-negative gain (C on ties). Requires A down, B up, disjoint, A <= S <= B^c;
// violations throw std::invalid_argument naming a witness vertex.
// The result is a down-set sandwiched between A and B^c with directed boundary
// no larger than that of S.
std::pair<CubeSet, std::vector<CompressionStep>> compress_to_down_set(const CubeSet& s,
                                                                      const CubeSet& a,
                                                                      const CubeSet& b,
                                                                      BoundaryMode mode);

}  // namespace cubepaths
