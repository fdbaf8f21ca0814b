#include "cubepaths/compression.hpp"

#include <stdexcept>

#include "cubepaths/boundary.hpp"

namespace cubepaths {

namespace {

void check_coord(int i, int n) {
  if (i < 1 || i > n) {
    throw std::out_of_range("coordinate " + std::to_string(i) + " out of range [1, " +
                            std::to_string(n) + "]");
  }
}

}  // namespace

CubeSet compress_C(const CubeSet& s, int i) {
  check_coord(i, s.dim());
  std::uint32_t bit = std::uint32_t{1} << (i - 1);
  CubeSet out(s.dim());
  s.for_each([&](std::uint32_t m) {
    if (s.contains(m & ~bit)) out.insert(m);
  });
  return out;
}

CubeSet compress_D(const CubeSet& s, int i) {
  check_coord(i, s.dim());
  std::uint32_t bit = std::uint32_t{1} << (i - 1);
  CubeSet out = s;
  s.for_each([&](std::uint32_t m) {
    if (m & bit) out.insert(m & ~bit);
  });
  return out;
}

std::uint64_t directed_boundary_size(const CubeSet& s, BoundaryMode mode) {
  return mode == BoundaryMode::edge ? directed_edge_boundary_size(s)
                                    : directed_vertex_boundary_size(s);
}

CompressionGap compression_gap(const CubeSet& s, int i, BoundaryMode mode) {
  std::int64_t before = static_cast<std::int64_t>(directed_boundary_size(s, mode));
  std::int64_t after_D = static_cast<std::int64_t>(directed_boundary_size(compress_D(s, i), mode));
  std::int64_t after_C = static_cast<std::int64_t>(directed_boundary_size(compress_C(s, i), mode));
  return {before - after_D, before - after_C};
}

std::pair<CubeSet, std::vector<CompressionStep>> compress_to_down_set(const CubeSet& s,
                                                                      const CubeSet& a,
                                                                      const CubeSet& b,
                                                                      BoundaryMode mode) {
  int n = s.dim();
  if (a.dim() != n || b.dim() != n) {
    throw std::invalid_argument("dimension mismatch in compress_to_down_set");
  }
  if (!is_down_set(a)) {
    for (std::uint32_t m : a.members()) {
      for (int j = 0; j < n; ++j) {
        std::uint32_t bit = std::uint32_t{1} << j;
        if ((m & bit) && !a.contains(m & ~bit)) {
          throw std::invalid_argument("A is not a down-set: " + mask_to_string(m, n) +
                                      " lacks subset " + mask_to_string(m & ~bit, n));
        }
      }
    }
  }
  if (!is_up_set(b)) {
    for (std::uint32_t m : b.members()) {
      for (int j = 0; j < n; ++j) {
        std::uint32_t bit = std::uint32_t{1} << j;
        if ((m & bit) == 0 && !b.contains(m | bit)) {
          throw std::invalid_argument("B is not an up-set: " + mask_to_string(m, n) +
                                      " lacks superset " + mask_to_string(m | bit, n));
        }
      }
    }
  }
  if (a.intersects(b)) {
    std::uint32_t witness = (a & b).members().front();
    throw std::invalid_argument("A and B intersect at " + mask_to_string(witness, n));
  }
  if (!a.subset_of(s)) {
    std::uint32_t witness = (a - s).members().front();
    throw std::invalid_argument("A is not contained in S, missing " + mask_to_string(witness, n));
  }
  if (s.intersects(b)) {
    std::uint32_t witness = (s & b).members().front();
    throw std::invalid_argument("S meets B at " + mask_to_string(witness, n));
  }

  CubeSet current = s;
  std::vector<CompressionStep> trace;
  trace.reserve(n);
  std::uint64_t before = directed_boundary_size(current, mode);
  for (int i = 1; i <= n; ++i) {
    CubeSet c = compress_C(current, i);
    std::uint64_t after_C = directed_boundary_size(c, mode);
    if (after_C <= before) {
      trace.push_back({i, 'C', before, after_C, mode});
      current = std::move(c);
      before = after_C;
      continue;
    }
    CubeSet d = compress_D(current, i);
    std::uint64_t after_D = directed_boundary_size(d, mode);
    trace.push_back({i, 'D', before, after_D, mode});
    current = std::move(d);
    before = after_D;
  }
  return {current, trace};
}

}  // namespace cubepaths
