#include "cubepaths/flownet.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubepaths {

namespace {

constexpr int kInf = 1 << 29;

void check_pair(const CubeSet& a, const CubeSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch between A and B");
  if (a.dim() > kMaxFlowDim) throw std::invalid_argument("flow operations support n <= 16");
  if (a.empty() || b.empty()) throw std::invalid_argument("A and B must be non-empty");
  if (a.intersects(b)) {
    throw std::invalid_argument("A and B must be disjoint, overlap at " +
                                mask_to_string((a & b).members().front(), a.dim()));
  }
}

}  // namespace

FlowNetwork::FlowNetwork(int node_count)
    : base_nodes_(node_count),
      super_source_(node_count),
      super_sink_(node_count + 1),
      adj_(node_count + 2) {}

int FlowNetwork::add_arc(int from, int to, int cap, int rev_cap) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, cap, cap});
  arcs_.push_back({from, rev_cap, rev_cap});
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

void FlowNetwork::add_source(int v, int cap) { add_arc(super_source_, v, cap); }

void FlowNetwork::add_sink(int v, int cap) { add_arc(v, super_sink_, cap); }

bool FlowNetwork::build_levels() {
  level_.assign(adj_.size(), -1);
  std::vector<int> queue{super_source_};
  level_[super_source_] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int id : adj_[v]) {
      const Arc& arc = arcs_[id];
      if (arc.cap > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[super_sink_] >= 0;
}

int FlowNetwork::augment(int v, int limit) {
  if (v == super_sink_ || limit == 0) return limit;
  for (int& idx = iter_[v]; idx < static_cast<int>(adj_[v].size()); ++idx) {
    int id = adj_[v][idx];
    Arc& arc = arcs_[id];
    if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
      int pushed = augment(arc.to, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
  }
  level_[v] = -1;
  return 0;
}

std::uint64_t FlowNetwork::max_flow() {
  std::uint64_t total = 0;
  while (build_levels()) {
    iter_.assign(adj_.size(), 0);
    while (int pushed = augment(super_source_, kInf)) total += std::uint64_t(pushed);
  }
  return total;
}

int FlowNetwork::flow_on(int arc_id) const {
  // Positive: net flow in the arc's forward direction.
  return arcs_[arc_id].initial_cap - arcs_[arc_id].cap;
}

std::vector<char> FlowNetwork::residual_reachable() const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> queue{super_source_};
  seen[super_source_] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int id : adj_[v]) {
      const Arc& arc = arcs_[id];
      if (arc.cap > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

namespace {

// Walk extraction from an integral flow: follow remaining flow units from each
// source, lowest-numbered neighbour first. Cycles met along a walk are erased
// and their flow discarded; walks restart at A vertices and stop at the first
// B vertex, so path interiors avoid A union B.
std::vector<std::vector<std::uint32_t>> decompose_paths(
    int node_count, const std::vector<std::vector<std::pair<int, int>>>& out_flow_init,
    const std::vector<int>& source_units, const std::vector<char>& is_a,
    const std::vector<char>& is_b) {
  auto out_flow = out_flow_init;  // per node: (to, units), insertion-ordered
  std::vector<std::vector<std::uint32_t>> paths;
  for (int start = 0; start < node_count; ++start) {
    for (int unit = 0; unit < source_units[start]; ++unit) {
      std::vector<std::uint32_t> walk{static_cast<std::uint32_t>(start)};
      std::vector<int> pos_in_walk(node_count, -1);
      pos_in_walk[start] = 0;
      int v = start;
      while (!is_b[v]) {
        auto& outs = out_flow[v];
        std::size_t pick = 0;
        while (pick < outs.size() && outs[pick].second == 0) ++pick;
        if (pick == outs.size()) {
          // Conservation guarantees an available arc until a sink is reached.
          throw std::logic_error("flow decomposition ran out of arcs mid-walk");
        }
        int next = outs[pick].first;
        --outs[pick].second;
        if (is_a[next]) {
          for (std::uint32_t w : walk) pos_in_walk[w] = -1;
          walk.assign(1, static_cast<std::uint32_t>(next));
          pos_in_walk[next] = 0;
        } else if (pos_in_walk[next] >= 0) {
          // Erase the cycle walk[pos+1..]; its arcs stay consumed.
          for (std::size_t j = pos_in_walk[next] + 1; j < walk.size(); ++j) {
            pos_in_walk[walk[j]] = -1;
          }
          walk.resize(pos_in_walk[next] + 1);
        } else {
          walk.push_back(static_cast<std::uint32_t>(next));
          pos_in_walk[next] = static_cast<int>(walk.size()) - 1;
        }
        v = next;
      }
      paths.push_back(std::move(walk));
    }
  }
  return paths;
}

}  // namespace

PathsResult edge_disjoint_paths(const CubeSet& a, const CubeSet& b, bool directed) {
  check_pair(a, b);
  int n = a.dim();
  int nodes = static_cast<int>(a.universe_size());
  FlowNetwork net(nodes);
  struct CubeArc {
    int id;
    std::uint32_t u, v;
  };
  std::vector<CubeArc> cube_arcs;
  for (int u = 0; u < nodes; ++u) {
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (std::uint32_t(u) & bit) continue;
      std::uint32_t v = std::uint32_t(u) | bit;
      int id = net.add_arc(u, static_cast<int>(v), 1, directed ? 0 : 1);
      cube_arcs.push_back({id, std::uint32_t(u), v});
    }
  }
  a.for_each([&](std::uint32_t m) { net.add_source(static_cast<int>(m)); });
  b.for_each([&](std::uint32_t m) { net.add_sink(static_cast<int>(m)); });

  std::uint64_t value = net.max_flow();

  // Net per-vertex out-flow, deterministic arc order.
  std::vector<std::vector<std::pair<int, int>>> out_flow(nodes);
  for (const CubeArc& arc : cube_arcs) {
    int f = net.flow_on(arc.id);
    if (f > 0) out_flow[arc.u].emplace_back(static_cast<int>(arc.v), f);
    else if (f < 0) out_flow[arc.v].emplace_back(static_cast<int>(arc.u), -f);
  }
  std::vector<int> source_units(nodes, 0);
  std::vector<char> is_a(nodes, 0), is_b(nodes, 0);
  a.for_each([&](std::uint32_t m) { is_a[m] = 1; });
  b.for_each([&](std::uint32_t m) { is_b[m] = 1; });
  {
    // Source units: total net out-flow minus net in-flow at each A vertex.
    std::vector<int> balance(nodes, 0);
    for (int u = 0; u < nodes; ++u) {
      for (auto [to, units] : out_flow[u]) {
        balance[u] += units;
        balance[to] -= units;
      }
    }
    a.for_each([&](std::uint32_t m) { source_units[m] = std::max(balance[m], 0); });
  }

  PathsResult result;
  result.count = value;
  result.family = {n, PathKind::edge_disjoint, directed,
                   decompose_paths(nodes, out_flow, source_units, is_a, is_b)};

  std::vector<char> reach = net.residual_reachable();
  CubeSet cut(n);
  for (int v = 0; v < nodes; ++v) {
    if (reach[v]) cut.insert(static_cast<std::uint32_t>(v));
  }
  result.cut_set = cut;
  result.cut_size = directed ? directed_edge_boundary_size(cut) : edge_boundary_size(cut);
  return result;
}

PathsResult vertex_disjoint_paths(const CubeSet& a, const CubeSet& b, bool directed) {
  check_pair(a, b);
  int n = a.dim();
  int cube_nodes = static_cast<int>(a.universe_size());

  // Node splitting: in(x) = 2x, out(x) = 2x + 1; interior vertices carry a
  // unit arc in->out. A vertices are entered never, B vertices left never.
  int nodes = 2 * cube_nodes;
  FlowNetwork net(nodes);
  auto in_node = [](std::uint32_t x) { return 2 * static_cast<int>(x); };
  auto out_node = [](std::uint32_t x) { return 2 * static_cast<int>(x) + 1; };

  std::vector<char> in_a(cube_nodes, 0), in_b(cube_nodes, 0);
  a.for_each([&](std::uint32_t m) { in_a[m] = 1; });
  b.for_each([&](std::uint32_t m) { in_b[m] = 1; });

  for (std::uint32_t x = 0; x < std::uint32_t(cube_nodes); ++x) {
    if (!in_a[x] && !in_b[x]) net.add_arc(in_node(x), out_node(x), 1);
  }

  std::vector<Edge> f_edges;
  struct SplitArc {
    int id;
    std::uint32_t tail, head;
  };
  std::vector<SplitArc> split_arcs;
  auto add_direction = [&](std::uint32_t tail, std::uint32_t head) {
    if (in_b[tail] || in_a[head]) return;  // cannot leave B or enter A
    split_arcs.push_back({net.add_arc(out_node(tail), in_node(head), 1), tail, head});
  };
  for (std::uint32_t u = 0; u < std::uint32_t(cube_nodes); ++u) {
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (u & bit) continue;
      std::uint32_t v = u | bit;
      bool is_f = (in_a[u] && in_b[v]) || (in_a[v] && in_b[u]);
      if (is_f) {
        if (!directed || (in_a[u] && in_b[v])) f_edges.push_back({u, v});
        continue;
      }
      if ((in_a[u] && in_a[v]) || (in_b[u] && in_b[v])) continue;
      add_direction(u, v);
      if (!directed) add_direction(v, u);
    }
  }
  a.for_each([&](std::uint32_t m) { net.add_source(out_node(m)); });
  b.for_each([&](std::uint32_t m) { net.add_sink(in_node(m)); });

  std::uint64_t flow = net.max_flow();

  std::vector<std::vector<std::pair<int, int>>> out_flow(nodes);
  // Split arcs (unit in->out) carry flow implicitly; record them too so the
  // generic walker can traverse in(x) -> out(x).
  for (std::uint32_t x = 0; x < std::uint32_t(cube_nodes); ++x) {
    if (!in_a[x] && !in_b[x]) out_flow[in_node(x)].emplace_back(out_node(x), kInf);
  }
  std::vector<int> source_units(nodes, 0);
  std::vector<char> is_a_node(nodes, 0), is_b_node(nodes, 0);
  for (const SplitArc& arc : split_arcs) {
    int f = net.flow_on(arc.id);
    if (f > 0) out_flow[out_node(arc.tail)].emplace_back(in_node(arc.head), f);
  }
  a.for_each([&](std::uint32_t m) {
    is_a_node[out_node(m)] = 1;
    int units = 0;
    for (auto [to, u] : out_flow[out_node(m)]) units += u;
    source_units[out_node(m)] = units;
  });
  b.for_each([&](std::uint32_t m) { is_b_node[in_node(m)] = 1; });

  auto raw_paths = decompose_paths(nodes, out_flow, source_units, is_a_node, is_b_node);

  PathFamily family{n, PathKind::vertex_disjoint_interiors, directed, {}};
  for (const Edge& e : f_edges) {
    if (in_a[e.u]) family.paths.push_back({e.u, e.v});
    else family.paths.push_back({e.v, e.u});
  }
  for (const auto& raw : raw_paths) {
    std::vector<std::uint32_t> path;
    for (std::uint32_t node : raw) {
      std::uint32_t x = node >> 1;
      if (path.empty() || path.back() != x) path.push_back(x);
    }
    family.paths.push_back(std::move(path));
  }

  PathsResult result;
  result.count = flow + f_edges.size();
  result.family = std::move(family);

  std::vector<char> reach = net.residual_reachable();
  CubeSet cut(n);
  a.for_each([&](std::uint32_t m) { cut.insert(m); });
  for (std::uint32_t x = 0; x < std::uint32_t(cube_nodes); ++x) {
    if (!in_a[x] && !in_b[x] && reach[out_node(x)]) cut.insert(x);
  }
  result.cut_set = cut;
  result.cut_size = result.count;
  return result;
}

MinBoundaryResult min_boundary_oracle(const CubeSet& a, const CubeSet& b, BoundaryKind kind,
                                      bool directed) {
  check_pair(a, b);
  CubeSet free = (a | b).complement();
  std::vector<std::uint32_t> free_members = free.members();
  if (static_cast<int>(free_members.size()) > kMaxFreeVertices) {
    throw std::invalid_argument("min_boundary_oracle instance too large: " +
                                std::to_string(free_members.size()) + " free vertices");
  }
  auto boundary = [&](const CubeSet& s) -> std::uint64_t {
    switch (kind) {
      case BoundaryKind::edge:
        return directed ? directed_edge_boundary_size(s) : edge_boundary_size(s);
      case BoundaryKind::vertex:
        return directed ? directed_vertex_boundary_size(s) : vertex_boundary_size(s);
    }
    return 0;
  };
  MinBoundaryResult best{boundary(a), a};
  std::uint64_t combos = std::uint64_t{1} << free_members.size();
  for (std::uint64_t pick = 1; pick < combos; ++pick) {
    CubeSet s = a;
    for (std::size_t j = 0; j < free_members.size(); ++j) {
      if (pick & (std::uint64_t{1} << j)) s.insert(free_members[j]);
    }
    std::uint64_t val = boundary(s);
    if (val < best.best) best = {val, s};
  }
  return best;
}

std::uint64_t max_matching_to_complement(const CubeSet& a) {
  int n = a.dim();
  if (n > kMaxFlowDim) throw std::invalid_argument("flow operations support n <= 16");
  if (a.size() > (a.universe_size() >> 1)) {
    throw std::invalid_argument("max_matching_to_complement requires |A| <= 2^(n-1)");
  }
  if (a.empty()) return 0;
  int nodes = static_cast<int>(a.universe_size());
  FlowNetwork net(nodes);
  std::vector<char> is_right(nodes, 0);
  a.for_each([&](std::uint32_t m) {
    net.add_source(static_cast<int>(m), 1);
    for (int j = 0; j < n; ++j) {
      std::uint32_t nb = m ^ (std::uint32_t{1} << j);
      if (!a.contains(nb)) {
        net.add_arc(static_cast<int>(m), static_cast<int>(nb), 1);
        is_right[nb] = 1;
      }
    }
  });
  for (int v = 0; v < nodes; ++v) {
    if (is_right[v]) net.add_sink(v, 1);
  }
  return net.max_flow();
}

bool validate_path_family(const PathFamily& family, const CubeSet& a, const CubeSet& b) {
  int n = family.dim;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_use;
  std::map<std::uint32_t, int> interior_use;
  for (const auto& path : family.paths) {
    if (path.size() < 2) return false;
    if (!a.contains(path.front()) || !b.contains(path.back())) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      std::uint32_t u = path[j], v = path[j + 1];
      std::uint32_t diff = u ^ v;
      if (std::popcount(diff) != 1 || std::max(u, v) >= (std::uint32_t{1} << n)) return false;
      if (family.directed && (v & diff) == 0) return false;  // must step to a superset
      ++edge_use[{std::min(u, v), std::max(u, v)}];
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      std::uint32_t x = path[j];
      if (a.contains(x) || b.contains(x)) return false;
      ++interior_use[x];
    }
  }
  if (family.kind == PathKind::edge_disjoint) {
    for (const auto& [edge, uses] : edge_use) {
      if (uses > 1) return false;
    }
  } else {
    for (const auto& [vertex, uses] : interior_use) {
      if (uses > 1) return false;
    }
  }
  return true;
}

}  // namespace cubepaths
