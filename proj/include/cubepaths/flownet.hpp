#pragma once

#include <cstdint>
#include <vector>

#include "cubepaths/boundary.hpp"
#include "cubepaths/cube_set.hpp"

namespace cubepaths {

// Unit-capacity max flow via level-graph blocking flow (Dinic). Arc order is
// insertion order, so results and witnesses are deterministic.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  // Adds arc from->to and its residual partner to->from with rev_cap.
  // rev_cap = cap models an undirected unit edge sharing one unit of capacity.
  int add_arc(int from, int to, int cap, int rev_cap = 0);

  void add_source(int v, int cap = 1 << 29);
  void add_sink(int v, int cap = 1 << 29);

  std::uint64_t max_flow();

  // Net flow pushed through arc id (forward use minus cancelled units).
  int flow_on(int arc_id) const;

  // Nodes reachable from the super-source in the final residual network.
  std::vector<char> residual_reachable() const;

  int node_count() const { return base_nodes_; }

 private:
  struct Arc {
    int to;
    int cap;
    int initial_cap;
  };

  int base_nodes_;
  int super_source_;
  int super_sink_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;

  bool build_levels();
  int augment(int v, int limit);
};

enum class PathKind { edge_disjoint, vertex_disjoint_interiors };

struct PathFamily {
  int dim = 0;
  PathKind kind = PathKind::edge_disjoint;
  bool directed = false;
  std::vector<std::vector<std::uint32_t>> paths;
};

struct PathsResult {
  std::uint64_t count = 0;
  PathFamily family;
  CubeSet cut_set;  // source side of a minimum cut, A <= cut_set <= B^c
  std::uint64_t cut_size = 0;
};

// Maximum family of pairwise edge-disjoint A-B paths (directed: every step
// goes to a superset). Count, the extracted family, and a minimum-cut witness
// whose boundary size (directed or undirected edge boundary of cut_set)
// equals the count.
PathsResult edge_disjoint_paths(const CubeSet& a, const CubeSet& b, bool directed);

// Maximum family of A-B paths with pairwise disjoint interiors; computed as
// |F| + max flow of the node-split network on Q_n - F, where F is the set of
// direct A-B edges (emitted as length-1 paths).
PathsResult vertex_disjoint_paths(const CubeSet& a, const CubeSet& b, bool directed);

enum class BoundaryKind { edge, vertex };

// Exhaustive minimum of the chosen boundary over all S with A <= S <= B^c.
// Throws if more than kMaxFreeVertices vertices are free.
inline constexpr int kMaxFreeVertices = 24;

struct MinBoundaryResult {
  std::uint64_t best = 0;
  CubeSet argmin;
};

MinBoundaryResult min_boundary_oracle(const CubeSet& a, const CubeSet& b, BoundaryKind kind,
                                      bool directed);

// Maximum matching between A and A^c along cube edges; requires |A| <= 2^{n-1}.
std::uint64_t max_matching_to_complement(const CubeSet& a);

// Checks the PathFamily invariants against A and B; returns true iff valid.
bool validate_path_family(const PathFamily& family, const CubeSet& a, const CubeSet& b);

}  // namespace cubepaths
