#include "cubepaths/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubepaths {

namespace {

template <typename F>
void for_each_crossing_edge(const CubeSet& s, F&& f) {
  // Visits every cube edge (u, u|bit) with exactly one endpoint in s.
  int n = s.dim();
  std::uint64_t total = s.universe_size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint32_t u = static_cast<std::uint32_t>(m);
    bool in_u = s.contains(u);
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (u & bit) continue;
      std::uint32_t v = u | bit;
      if (in_u != s.contains(v)) f(u, v, in_u);
    }
  }
}

}  // namespace

EdgeSet edge_boundary(const CubeSet& s) {
  EdgeSet out{s.dim(), {}};
  for_each_crossing_edge(s, [&](std::uint32_t u, std::uint32_t v, bool) {
    out.edges.push_back({u, v});
  });
  return out;
}

EdgeSet directed_edge_boundary(const CubeSet& s) {
  EdgeSet out{s.dim(), {}};
  for_each_crossing_edge(s, [&](std::uint32_t u, std::uint32_t v, bool smaller_in_s) {
    if (smaller_in_s) out.edges.push_back({u, v});
  });
  return out;
}

std::uint64_t edge_boundary_size(const CubeSet& s) {
  std::uint64_t count = 0;
  for_each_crossing_edge(s, [&](std::uint32_t, std::uint32_t, bool) { ++count; });
  return count;
}

std::uint64_t directed_edge_boundary_size(const CubeSet& s) {
  std::uint64_t count = 0;
  int n = s.dim();
  s.for_each([&](std::uint32_t u) {
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if ((u & bit) == 0 && !s.contains(u | bit)) ++count;
    }
  });
  return count;
}

EdgeSet edge_between(const CubeSet& s1, const CubeSet& s2, bool directed) {
  if (s1.dim() != s2.dim()) throw std::invalid_argument("dimension mismatch in edge_between");
  EdgeSet out{s1.dim(), {}};
  int n = s1.dim();
  std::uint64_t total = s1.universe_size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint32_t u = static_cast<std::uint32_t>(m);
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (u & bit) continue;
      std::uint32_t v = u | bit;
      bool hit = (s1.contains(u) && s2.contains(v)) ||
                 (!directed && s1.contains(v) && s2.contains(u));
      if (hit) out.edges.push_back({u, v});
    }
  }
  return out;
}

CubeSet vertex_boundary(const CubeSet& s) {
  CubeSet out(s.dim());
  int n = s.dim();
  s.for_each([&](std::uint32_t u) {
    for (int j = 0; j < n; ++j) {
      std::uint32_t nb = u ^ (std::uint32_t{1} << j);
      if (!s.contains(nb)) out.insert(nb);
    }
  });
  return out;
}

CubeSet directed_vertex_boundary(const CubeSet& s) {
  CubeSet out(s.dim());
  int n = s.dim();
  s.for_each([&](std::uint32_t u) {
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if ((u & bit) == 0 && !s.contains(u | bit)) out.insert(u | bit);
    }
  });
  return out;
}

std::uint64_t vertex_boundary_size(const CubeSet& s) { return vertex_boundary(s).size(); }

std::uint64_t directed_vertex_boundary_size(const CubeSet& s) {
  return directed_vertex_boundary(s).size();
}

CubeSet surface(const CubeSet& s) { return vertex_boundary(s.complement()); }

CubeSet lower_shadow(const CubeSet& a) {
  CubeSet out(a.dim());
  int level = -1;
  bool homogeneous = true;
  std::uint32_t bad = 0;
  a.for_each([&](std::uint32_t m) {
    int w = std::popcount(m);
    if (level == -1) level = w;
    else if (w != level && homogeneous) {
      homogeneous = false;
      bad = m;
    }
  });
  if (!homogeneous) {
    throw std::invalid_argument("lower_shadow input is not level-homogeneous, offending vertex " +
                                mask_to_string(bad, a.dim()));
  }
  if (level == 0 && !a.empty()) {
    throw std::invalid_argument("lower_shadow requires level r >= 1");
  }
  a.for_each([&](std::uint32_t m) {
    std::uint32_t rest = m;
    while (rest) {
      std::uint32_t bit = rest & (0u - rest);
      out.insert(m & ~bit);
      rest &= rest - 1;
    }
  });
  return out;
}

CubeSet up_closure(const CubeSet& s) { return s | directed_vertex_boundary(s); }

}  // namespace cubepaths
