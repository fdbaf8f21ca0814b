#include "cubepaths/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "cubepaths/boundary.hpp"
#include "cubepaths/bounds.hpp"
#include "cubepaths/compression.hpp"
#include "cubepaths/flownet.hpp"

namespace cubepaths {

namespace {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

CubeSet down_closure(CubeSet s) {
  int n = s.dim();
  for (std::int64_t m = static_cast<std::int64_t>(s.universe_size()) - 1; m >= 0; --m) {
    std::uint32_t mask = static_cast<std::uint32_t>(m);
    if (!s.contains(mask)) continue;
    for (int j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (mask & bit) s.insert(mask & ~bit);
    }
  }
  return s;
}

CubeSet upward_closure(CubeSet s) {
  int n = s.dim();
  std::uint64_t total = s.universe_size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint32_t mask = static_cast<std::uint32_t>(m);
    if (!s.contains(mask)) continue;
    for (int j = 0; j < n; ++j) s.insert(mask | (std::uint32_t{1} << j));
  }
  return s;
}

// Down-sets of P[n] as characteristic bitmasks over 2^n vertices, n <= 5.
std::vector<std::uint64_t> down_set_masks(int n) {
  if (n == 0) return {0b0ull, 0b1ull};
  std::vector<std::uint64_t> prev = down_set_masks(n - 1);
  std::uint64_t half_bits = std::uint64_t{1} << (n - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t lo : prev) {
    for (std::uint64_t hi : prev) {
      if (hi & ~lo) continue;  // upper section must sit inside the lower one
      out.push_back((hi << half_bits) | lo);
    }
  }
  return out;
}

CubeSet set_from_characteristic(int n, std::uint64_t bits) {
  CubeSet s(n);
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (bits & (std::uint64_t{1} << m)) s.insert(static_cast<std::uint32_t>(m));
  }
  return s;
}

std::uint64_t characteristic_of(const CubeSet& s) {
  std::uint64_t bits = 0;
  s.for_each([&](std::uint32_t m) { bits |= std::uint64_t{1} << m; });
  return bits;
}

}  // namespace

const std::vector<std::string>& known_theorems() {
  static const std::vector<std::string> ids = {
      "diredges",       "directedvertices",
      "diredgeiso",     "dirvertexiso",
      "edgelemma",      "vertexobs",
      "bledgesfull",    "blfullvertices",
      "matchings",      "weakKK",
      "edgeiso",        "vertexiso",
      "containments",   "preservesdownness",
      "compressionreducesoutedges", "compressionreducesupneighbours",
  };
  return ids;
}

std::vector<CubeSet> enumerate_down_sets(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_down_sets supports 1 <= n <= 5");
  std::vector<CubeSet> out;
  for (std::uint64_t bits : down_set_masks(n)) out.push_back(set_from_characteristic(n, bits));
  return out;
}

RandomInstance random_instance(int n, InstanceShape shape, std::uint64_t seed) {
  if (n < 1 || n > kMaxFlowDim) throw std::invalid_argument("random_instance supports 1 <= n <= 16");
  std::mt19937_64 rng(mix_seed(seed, (std::uint64_t(n) << 3) | std::uint64_t(shape)));
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t half = total >> 1;

  RandomInstance inst;
  inst.n = n;
  inst.A = CubeSet(n);
  inst.B = CubeSet(n);
  inst.S = CubeSet(n);

  auto draw_down_up = [&]() -> bool {
    std::uint64_t t = 1 + rng() % std::max<std::uint64_t>(half, 1);
    CubeSet a(n);
    for (std::uint64_t j = 0; j < t; ++j) a.insert(static_cast<std::uint32_t>(rng() % total));
    a = down_closure(a);
    if (a.size() == total) return false;
    std::vector<std::uint32_t> rest = a.complement().members();
    std::uint64_t t2 = 1 + rng() % std::max<std::uint64_t>(half, 1);
    CubeSet b(n);
    for (std::uint64_t j = 0; j < t2; ++j) b.insert(rest[rng() % rest.size()]);
    b = upward_closure(b);
    if (b.empty() || a.intersects(b)) return false;
    inst.A = a;
    inst.B = b;
    return true;
  };

  for (int attempt = 0; attempt < 10000; ++attempt) {
    switch (shape) {
      case InstanceShape::disjoint_pair: {
        CubeSet a(n), b(n);
        for (std::uint64_t m = 0; m < total; ++m) {
          switch (rng() % 4) {
            case 0: a.insert(static_cast<std::uint32_t>(m)); break;
            case 1: b.insert(static_cast<std::uint32_t>(m)); break;
            default: break;
          }
        }
        if (a.empty() || b.empty()) continue;
        inst.A = a;
        inst.B = b;
        return inst;
      }
      case InstanceShape::down_up_pair: {
        if (!draw_down_up()) continue;
        return inst;
      }
      case InstanceShape::between_set: {
        if (!draw_down_up()) continue;
        CubeSet s = inst.A;
        (inst.A | inst.B).complement().for_each([&](std::uint32_t m) {
          if (rng() & 1) s.insert(m);
        });
        inst.S = s;
        return inst;
      }
      case InstanceShape::level_family: {
        int r = 1 + static_cast<int>(rng() % std::uint64_t(n));
        CubeSet fam(n);
        for (std::uint64_t m = 0; m < total; ++m) {
          if (std::popcount(m) == r && (rng() & 1)) fam.insert(static_cast<std::uint32_t>(m));
        }
        if (fam.empty()) continue;
        inst.r = r;
        inst.A = fam;
        return inst;
      }
    }
  }
  throw std::runtime_error("random_instance rejection failure after 10,000 attempts");
}

std::uint64_t brute_min_vertex_cut(const CubeSet& a, const CubeSet& b, bool directed) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  int n = a.dim();
  std::uint64_t total = a.universe_size();
  std::vector<std::uint32_t> interior;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint32_t mask = static_cast<std::uint32_t>(m);
    if (!a.contains(mask) && !b.contains(mask)) interior.push_back(mask);
  }
  if (interior.size() > 20) throw std::invalid_argument("brute_min_vertex_cut instance too large");

  auto separated = [&](std::uint64_t cut_pick) -> bool {
    std::vector<char> blocked(total, 0);
    for (std::size_t j = 0; j < interior.size(); ++j) {
      if (cut_pick & (std::uint64_t{1} << j)) blocked[interior[j]] = 1;
    }
    std::vector<char> seen(total, 0);
    std::vector<std::uint32_t> queue;
    a.for_each([&](std::uint32_t m) {
      seen[m] = 1;
      queue.push_back(m);
    });
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t u = queue[head];
      for (int j = 0; j < n; ++j) {
        std::uint32_t bit = std::uint32_t{1} << j;
        std::uint32_t v = u ^ bit;
        if (directed && (u & bit)) continue;  // only arcs toward supersets
        if (a.contains(u) && b.contains(v)) continue;  // F edge removed
        if (b.contains(u)) continue;                   // do not walk out of B
        if (blocked[v] || seen[v]) continue;
        if (b.contains(v)) return false;
        seen[v] = 1;
        queue.push_back(v);
      }
    }
    return true;
  };

  std::uint64_t best = interior.size() + 1;  // separated by cutting everything
  std::uint64_t combos = std::uint64_t{1} << interior.size();
  for (std::uint64_t pick = 0; pick < combos; ++pick) {
    std::uint64_t sz = std::uint64_t(std::popcount(pick));
    if (sz >= best) continue;
    if (separated(pick)) best = sz;
  }
  return best;
}

Json Certificate::to_json() const {
  Json j;
  j["theorem"] = theorem_id;
  j["instance"] = instance;
  j["computed"] = computed;
  j["verdict"] = pass ? "pass" : "fail";
  j["seed"] = seed;
  return j;
}

namespace {

CubeSet set_field(const Json& instance, const char* key) {
  int n = instance.at("n").get<int>();
  return member_list_from_json(instance.at(key), n);
}

Certificate make_cert(const std::string& id, const Json& instance, Json computed, bool pass,
                      const std::string& seed_label) {
  Certificate cert;
  cert.theorem_id = id;
  cert.instance = instance;
  cert.computed = std::move(computed);
  cert.pass = pass;
  cert.seed = seed_label;
  return cert;
}

}  // namespace

Certificate check_instance(const std::string& theorem_id, const Json& instance,
                           const std::string& seed_label) {
  int n = instance.at("n").get<int>();
  Json computed;

  if (theorem_id == "diredges" || theorem_id == "directedvertices") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    bool vertex_kind = theorem_id == "directedvertices";
    auto undirected = vertex_kind ? vertex_disjoint_paths(a, b, false)
                                  : edge_disjoint_paths(a, b, false);
    auto directed = vertex_kind ? vertex_disjoint_paths(a, b, true)
                                : edge_disjoint_paths(a, b, true);
    computed["undirected"] = undirected.count;
    computed["directed"] = directed.count;
    bool pass = undirected.count == directed.count &&
                validate_path_family(undirected.family, a, b) &&
                validate_path_family(directed.family, a, b) &&
                undirected.family.paths.size() == undirected.count &&
                directed.family.paths.size() == directed.count;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "diredgeiso") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    auto dir = min_boundary_oracle(a, b, BoundaryKind::edge, true);
    auto undir = min_boundary_oracle(a, b, BoundaryKind::edge, false);
    auto [down, trace] = compress_to_down_set(dir.argmin, a, b, BoundaryMode::edge);
    std::uint64_t down_boundary = directed_edge_boundary_size(down);
    computed["directed_min"] = dir.best;
    computed["undirected_min"] = undir.best;
    computed["down_set_boundary"] = down_boundary;
    computed["down_set"] = member_list_to_json(down);
    bool pass = dir.best == undir.best && is_down_set(down) && a.subset_of(down) &&
                !down.intersects(b) && down_boundary == dir.best;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "dirvertexiso") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    CubeSet s = set_field(instance, "S");
    std::uint64_t before = directed_vertex_boundary_size(s);
    auto [down, trace] = compress_to_down_set(s, a, b, BoundaryMode::vertex);
    std::uint64_t after = directed_vertex_boundary_size(down);
    computed["boundary_before"] = before;
    computed["boundary_after"] = after;
    computed["down_set"] = member_list_to_json(down);
    bool pass = is_down_set(down) && a.subset_of(down) && !down.intersects(b) && after <= before;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "edgelemma") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    auto flow = edge_disjoint_paths(a, b, false);
    auto oracle = min_boundary_oracle(a, b, BoundaryKind::edge, false);
    computed["p_e"] = flow.count;
    computed["min_boundary"] = oracle.best;
    computed["cut_size"] = flow.cut_size;
    bool pass = flow.count == oracle.best && flow.cut_size == flow.count &&
                validate_path_family(flow.family, a, b);
    if (is_down_set(a) && is_up_set(b)) {
      auto dflow = edge_disjoint_paths(a, b, true);
      auto doracle = min_boundary_oracle(a, b, BoundaryKind::edge, true);
      computed["p_dir_e"] = dflow.count;
      computed["min_directed_boundary"] = doracle.best;
      pass = pass && dflow.count == doracle.best && dflow.cut_size == dflow.count;
    }
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "vertexobs") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    auto flow = vertex_disjoint_paths(a, b, false);
    std::uint64_t f_count = edge_between(a, b, false).size();
    std::uint64_t cut = brute_min_vertex_cut(a, b, false);
    computed["p_v"] = flow.count;
    computed["f_edges"] = f_count;
    computed["min_vertex_cut"] = cut;
    bool pass = flow.count == f_count + cut && validate_path_family(flow.family, a, b);
    auto dflow = vertex_disjoint_paths(a, b, true);
    std::uint64_t df_count = edge_between(a, b, true).size();
    std::uint64_t dcut = brute_min_vertex_cut(a, b, true);
    computed["p_dir_v"] = dflow.count;
    computed["f_arcs"] = df_count;
    computed["min_directed_vertex_cut"] = dcut;
    pass = pass && dflow.count == df_count + dcut;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "bledgesfull") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    auto flow = edge_disjoint_paths(a, b, false);
    double bound = bl_edge_bound(n, a.size(), b.size());
    computed["p_e"] = flow.count;
    computed["bound"] = format_real(bound);
    bool pass = static_cast<double>(flow.count) >= bound - 1e-6;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "blfullvertices") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    auto flow = vertex_disjoint_paths(a, b, false);
    Rational bound = bl_vertex_bound(n, a.size(), b.size());
    computed["p_v"] = flow.count;
    computed["bound"] = rational_to_string(bound);
    bool pass = Rational(flow.count) >= bound;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "matchings") {
    CubeSet a = set_field(instance, "A");
    std::uint64_t matching = max_matching_to_complement(a);
    Rational bound = a.empty() ? Rational(0) : func_s(n, a.size());
    computed["matching"] = matching;
    computed["bound"] = rational_to_string(bound);
    bool pass = Rational(matching) >= bound;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "weakKK") {
    int r = instance.at("r").get<int>();
    CubeSet fam = set_field(instance, "A");
    CubeSet shadow = lower_shadow(fam);
    double x = solve_kk_threshold(fam.size(), r);
    double bound = fractional_binomial(x, r - 1);
    computed["shadow"] = shadow.size();
    computed["x"] = format_real(x);
    computed["bound"] = format_real(bound);
    bool pass = static_cast<double>(shadow.size()) >= bound - 1e-9;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "edgeiso" || theorem_id == "vertexiso") {
    CubeSet s = set_field(instance, "S");
    bool edge_kind = theorem_id == "edgeiso";
    CubeSet segment = initial_segment(
        n, s.size(), edge_kind ? VertexOrder::binary : VertexOrder::simplicial);
    std::uint64_t actual = edge_kind ? edge_boundary_size(s) : vertex_boundary_size(s);
    std::uint64_t optimal = edge_kind ? edge_boundary_size(segment) : vertex_boundary_size(segment);
    computed["boundary"] = actual;
    computed["initial_segment_boundary"] = optimal;
    return make_cert(theorem_id, instance, std::move(computed), actual >= optimal, seed_label);
  }

  if (theorem_id == "containments") {
    CubeSet a = set_field(instance, "A"), b = set_field(instance, "B");
    CubeSet s = set_field(instance, "S");
    int i = instance.at("i").get<int>();
    CubeSet c = compress_C(s, i), d = compress_D(s, i);
    bool pass = a.subset_of(c) && c.subset_of(s) && s.subset_of(d) && !d.intersects(b);
    computed["sizes"] = Json::array({c.size(), s.size(), d.size()});
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "preservesdownness") {
    CubeSet s = set_field(instance, "S");
    int i = instance.at("i").get<int>();
    int j = instance.at("j").get<int>();
    bool j_down = is_i_down(s, j);
    CubeSet c = compress_C(s, i), d = compress_D(s, i);
    bool pass = is_i_down(c, i) && is_i_down(d, i) &&
                (!j_down || (is_i_down(c, j) && is_i_down(d, j)));
    computed["j_down_before"] = j_down;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  if (theorem_id == "compressionreducesoutedges" ||
      theorem_id == "compressionreducesupneighbours") {
    CubeSet s = set_field(instance, "S");
    int i = instance.at("i").get<int>();
    BoundaryMode mode = theorem_id == "compressionreducesoutedges" ? BoundaryMode::edge
                                                                   : BoundaryMode::vertex;
    std::uint64_t before = directed_boundary_size(s, mode);
    std::uint64_t after_D = directed_boundary_size(compress_D(s, i), mode);
    std::uint64_t after_C = directed_boundary_size(compress_C(s, i), mode);
    computed["boundary"] = before;
    computed["boundary_D"] = after_D;
    computed["boundary_C"] = after_C;
    bool pass = 2 * before >= after_D + after_C && std::min(after_D, after_C) <= before;
    return make_cert(theorem_id, instance, std::move(computed), pass, seed_label);
  }

  throw std::invalid_argument("unknown theorem id: " + theorem_id);
}

namespace {

Json pair_instance(int n, const CubeSet& a, const CubeSet& b) {
  Json j;
  j["n"] = n;
  j["A"] = member_list_to_json(a);
  j["B"] = member_list_to_json(b);
  return j;
}

// All disjoint non-empty (A, B) pairs of P[n]; n <= 3 keeps this at 3^8 scale.
template <typename F>
void for_each_disjoint_pair(int n, F&& f) {
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t families = std::uint64_t{1} << total;
  for (std::uint64_t abits = 1; abits < families; ++abits) {
    std::uint64_t rest = ~abits & (families - 1);
    // Iterate non-empty sub-bitsets of the complement.
    for (std::uint64_t bbits = rest; bbits != 0; bbits = (bbits - 1) & rest) {
      f(set_from_characteristic(n, abits), set_from_characteristic(n, bbits));
    }
  }
}

template <typename F>
void for_each_down_up_pair(int n, F&& f) {
  auto downs = enumerate_down_sets(n);
  for (const CubeSet& a : downs) {
    if (a.empty()) continue;
    for (const CubeSet& d : downs) {
      CubeSet b = d.complement();  // up-sets are complements of down-sets
      if (b.empty() || a.intersects(b)) continue;
      f(a, b);
    }
  }
}

template <typename F>
void for_each_exhaustive_instance(const std::string& id, int n, F&& emit) {
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t families = std::uint64_t{1} << total;

  if (id == "diredges" || id == "directedvertices" || id == "diredgeiso") {
    if (n > 4) throw std::invalid_argument("exhaustive down/up sweep capped at n <= 4");
    for_each_down_up_pair(n, [&](const CubeSet& a, const CubeSet& b) {
      emit(pair_instance(n, a, b));
    });
    return;
  }

  if (id == "edgelemma" || id == "vertexobs" || id == "bledgesfull" || id == "blfullvertices") {
    if (n > 3) throw std::invalid_argument("exhaustive disjoint-pair sweep capped at n <= 3");
    for_each_disjoint_pair(n, [&](const CubeSet& a, const CubeSet& b) {
      emit(pair_instance(n, a, b));
    });
    return;
  }

  if (id == "dirvertexiso" || id == "containments") {
    if (n > 3) throw std::invalid_argument("exhaustive sandwich sweep capped at n <= 3");
    for_each_down_up_pair(n, [&](const CubeSet& a, const CubeSet& b) {
      std::vector<std::uint32_t> free = (a | b).complement().members();
      std::uint64_t combos = std::uint64_t{1} << free.size();
      for (std::uint64_t pick = 0; pick < combos; ++pick) {
        CubeSet s = a;
        for (std::size_t j = 0; j < free.size(); ++j) {
          if (pick & (std::uint64_t{1} << j)) s.insert(free[j]);
        }
        Json inst = pair_instance(n, a, b);
        inst["S"] = member_list_to_json(s);
        if (id == "containments") {
          for (int i = 1; i <= n; ++i) {
            Json with_i = inst;
            with_i["i"] = i;
            emit(std::move(with_i));
          }
        } else {
          emit(std::move(inst));
        }
      }
    });
    return;
  }

  if (id == "edgeiso" || id == "vertexiso") {
    if (n > 4) throw std::invalid_argument("all-subsets sweep capped at n <= 4");
    for (std::uint64_t bits = 0; bits < families; ++bits) {
      Json inst;
      inst["n"] = n;
      inst["S"] = member_list_to_json(set_from_characteristic(n, bits));
      emit(std::move(inst));
    }
    return;
  }

  if (id == "preservesdownness") {
    if (n > 3) throw std::invalid_argument("all-subsets (i,j) sweep capped at n <= 3");
    for (std::uint64_t bits = 0; bits < families; ++bits) {
      Json base;
      base["n"] = n;
      base["S"] = member_list_to_json(set_from_characteristic(n, bits));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          Json inst = base;
          inst["i"] = i;
          inst["j"] = j;
          emit(std::move(inst));
        }
      }
    }
    return;
  }

  if (id == "compressionreducesoutedges" || id == "compressionreducesupneighbours") {
    if (n > 4) throw std::invalid_argument("all-subsets compression sweep capped at n <= 4");
    for (std::uint64_t bits = 0; bits < families; ++bits) {
      Json base;
      base["n"] = n;
      base["S"] = member_list_to_json(set_from_characteristic(n, bits));
      for (int i = 1; i <= n; ++i) {
        Json inst = base;
        inst["i"] = i;
        emit(std::move(inst));
      }
    }
    return;
  }

  if (id == "matchings") {
    if (n > 4) throw std::invalid_argument("matchings sweep capped at n <= 4");
    for (std::uint64_t bits = 0; bits < families; ++bits) {
      if (std::uint64_t(std::popcount(bits)) > total / 2) continue;
      Json inst;
      inst["n"] = n;
      inst["A"] = member_list_to_json(set_from_characteristic(n, bits));
      emit(std::move(inst));
    }
    return;
  }

  if (id == "weakKK") {
    if (n > 4) throw std::invalid_argument("level-family sweep capped at n <= 4");
    for (int r = 1; r <= n; ++r) {
      std::vector<std::uint32_t> level;
      for (std::uint64_t m = 0; m < total; ++m) {
        if (std::popcount(m) == r) level.push_back(static_cast<std::uint32_t>(m));
      }
      std::uint64_t combos = std::uint64_t{1} << level.size();
      for (std::uint64_t pick = 1; pick < combos; ++pick) {
        CubeSet fam(n);
        for (std::size_t j = 0; j < level.size(); ++j) {
          if (pick & (std::uint64_t{1} << j)) fam.insert(level[j]);
        }
        Json inst;
        inst["n"] = n;
        inst["r"] = r;
        inst["A"] = member_list_to_json(fam);
        emit(std::move(inst));
      }
    }
    return;
  }

  throw std::invalid_argument("unknown theorem id: " + id);
}

struct SeededInstance {
  Json instance;
  std::string seed_label;
};

SeededInstance build_random_instance(const std::string& id, int n, std::uint64_t seed) {
  std::mt19937_64 extra(mix_seed(seed, 0x5eed));
  SeededInstance out;
  out.seed_label = std::to_string(seed);

  auto pair_of = [&](InstanceShape shape) {
    RandomInstance ri = random_instance(n, shape, seed);
    return pair_instance(n, ri.A, ri.B);
  };

  if (id == "diredges" || id == "directedvertices" || id == "diredgeiso") {
    out.instance = pair_of(InstanceShape::down_up_pair);
  } else if (id == "edgelemma" || id == "vertexobs" || id == "bledgesfull" ||
             id == "blfullvertices") {
    out.instance = pair_of(InstanceShape::disjoint_pair);
  } else if (id == "dirvertexiso" || id == "containments") {
    RandomInstance ri = random_instance(n, InstanceShape::between_set, seed);
    out.instance = pair_instance(n, ri.A, ri.B);
    out.instance["S"] = member_list_to_json(ri.S);
    if (id == "containments") out.instance["i"] = 1 + static_cast<int>(extra() % std::uint64_t(n));
  } else if (id == "edgeiso" || id == "vertexiso") {
    CubeSet s(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (extra() & 1) s.insert(static_cast<std::uint32_t>(m));
    }
    out.instance["n"] = n;
    out.instance["S"] = member_list_to_json(s);
  } else if (id == "preservesdownness" || id == "compressionreducesoutedges" ||
             id == "compressionreducesupneighbours") {
    CubeSet s(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (extra() & 1) s.insert(static_cast<std::uint32_t>(m));
    }
    out.instance["n"] = n;
    out.instance["S"] = member_list_to_json(s);
    out.instance["i"] = 1 + static_cast<int>(extra() % std::uint64_t(n));
    if (id == "preservesdownness") {
      out.instance["j"] = 1 + static_cast<int>(extra() % std::uint64_t(n));
    }
  } else if (id == "matchings") {
    std::uint64_t total = std::uint64_t{1} << n;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      CubeSet a(n);
      for (std::uint64_t m = 0; m < total; ++m) {
        if (extra() % 3 == 0) a.insert(static_cast<std::uint32_t>(m));
      }
      if (!a.empty() && a.size() <= total / 2) {
        out.instance["n"] = n;
        out.instance["A"] = member_list_to_json(a);
        return out;
      }
    }
    throw std::runtime_error("matchings instance rejection failure");
  } else if (id == "weakKK") {
    RandomInstance ri = random_instance(n, InstanceShape::level_family, seed);
    out.instance["n"] = n;
    out.instance["r"] = ri.r;
    out.instance["A"] = member_list_to_json(ri.A);
  } else {
    throw std::invalid_argument("unknown theorem id: " + id);
  }
  return out;
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("CUBEPATHS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepSummary run_theorem(const SweepPlan& plan,
                         const std::function<void(const Certificate&)>& sink) {
  SweepSummary summary;

  if (plan.strategy == SweepStrategy::exhaustive) {
    bool stop = false;
    for_each_exhaustive_instance(plan.theorem_id, plan.n, [&](Json inst) {
      if (stop) return;
      Certificate cert = check_instance(plan.theorem_id, inst);
      ++summary.total;
      if (!cert.pass) {
        ++summary.failures;
        if (plan.fail_fast) stop = true;
      }
      sink(cert);
    });
    return summary;
  }

  std::vector<SeededInstance> instances;
  instances.reserve(plan.count);
  for (std::uint64_t idx = 0; idx < plan.count; ++idx) {
    instances.push_back(build_random_instance(plan.theorem_id, plan.n, mix_seed(plan.seed, idx)));
  }

  std::vector<Certificate> certs(instances.size());
  int workers = plan.fail_fast ? 1 : std::min<int>(worker_count(), int(instances.size()) + 1);
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
      certs[idx] = check_instance(plan.theorem_id, instances[idx].instance,
                                  instances[idx].seed_label);
      if (plan.fail_fast && !certs[idx].pass) {
        certs.resize(idx + 1);
        break;
      }
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (std::size_t idx = next.fetch_add(1); idx < instances.size();
             idx = next.fetch_add(1)) {
          certs[idx] = check_instance(plan.theorem_id, instances[idx].instance,
                                      instances[idx].seed_label);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const Certificate& cert : certs) {
    ++summary.total;
    if (!cert.pass) ++summary.failures;
    sink(cert);
  }
  return summary;
}

std::vector<Certificate> run_theorem(const SweepPlan& plan) {
  std::vector<Certificate> out;
  run_theorem(plan, [&](const Certificate& cert) { out.push_back(cert); });
  return out;
}

std::vector<SweepPlan> default_suite() {
  std::vector<SweepPlan> plans;
  auto add = [&](const std::string& id, int ex_n, int rnd_n, std::uint64_t count,
                 std::uint64_t seed) {
    plans.push_back({id, ex_n, SweepStrategy::exhaustive, 0, 0, false});
    plans.push_back({id, rnd_n, SweepStrategy::random, count, seed, false});
  };
  add("diredges", 3, 5, 200, 1001);
  add("directedvertices", 3, 5, 200, 1002);
  add("diredgeiso", 3, 4, 200, 1003);
  add("dirvertexiso", 3, 5, 500, 1004);
  add("edgelemma", 3, 4, 200, 1005);
  add("vertexobs", 3, 4, 200, 1006);
  add("bledgesfull", 3, 6, 1000, 1007);
  add("blfullvertices", 3, 6, 1000, 1008);
  add("matchings", 3, 5, 1000, 1009);
  add("weakKK", 4, 7, 1000, 1010);
  add("edgeiso", 4, 6, 2000, 1011);
  add("vertexiso", 4, 6, 2000, 1012);
  add("containments", 3, 5, 2000, 1013);
  add("preservesdownness", 3, 6, 2000, 1014);
  add("compressionreducesoutedges", 4, 6, 2000, 1015);
  add("compressionreducesupneighbours", 4, 6, 2000, 1016);
  return plans;
}

NegativeControl negative_control_sweep(int n) {
  if (n > 3) throw std::invalid_argument("negative control sweep capped at n <= 3");
  NegativeControl result;
  for_each_disjoint_pair(n, [&](const CubeSet& a, const CubeSet& b) {
    if (is_down_set(a) && is_up_set(b)) return;
    ++result.pairs_checked;
    std::uint64_t pe = edge_disjoint_paths(a, b, false).count;
    std::uint64_t pde = edge_disjoint_paths(a, b, true).count;
    if (pde < pe) {
      ++result.strict_count;
      if (!result.found) {
        result.found = true;
        result.witness = pair_instance(n, a, b);
        result.witness["p_e"] = pe;
        result.witness["p_dir_e"] = pde;
      }
    }
  });
  return result;
}

}  // namespace cubepaths
