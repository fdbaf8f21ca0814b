#pragma once

#include <cstdint>
#include <vector>

#include "cubepaths/cube_set.hpp"

namespace cubepaths {

// A cube edge stored smaller-endpoint-first: v == u | (1 << j) for one j.
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct EdgeSet {
  int dim = 0;
  std::vector<Edge> edges;  // sorted ascending (u, v)

  std::uint64_t size() const { return edges.size(); }
};

EdgeSet edge_boundary(const CubeSet& s);
EdgeSet directed_edge_boundary(const CubeSet& s);

// Size-only variants for hot sweeps.
std::uint64_t edge_boundary_size(const CubeSet& s);
std::uint64_t directed_edge_boundary_size(const CubeSet& s);

// Edges with one endpoint in each set (directed: smaller endpoint in s1).
// Endpoint membership is tested independently, so overlapping inputs are fine.
EdgeSet edge_between(const CubeSet& s1, const CubeSet& s2, bool directed);

CubeSet vertex_boundary(const CubeSet& s);
CubeSet directed_vertex_boundary(const CubeSet& s);
std::uint64_t vertex_boundary_size(const CubeSet& s);
std::uint64_t directed_vertex_boundary_size(const CubeSet& s);

// sigma(S) = vertex_boundary(S^c): members of S with a neighbour outside S.
CubeSet surface(const CubeSet& s);

// All (r-1)-subsets reachable by deleting one element from a member of a.
// Throws std::invalid_argument unless all members share one cardinality r >= 1
// (the empty family is allowed and maps to the empty family).
CubeSet lower_shadow(const CubeSet& a);

// h(S) = S together with its directed vertex boundary.
CubeSet up_closure(const CubeSet& s);

}  // namespace cubepaths
