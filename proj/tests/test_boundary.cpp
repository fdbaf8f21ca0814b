#include <doctest.h>

#include <stdexcept>

#include <bit>
#include <random>

#include "cubepaths/boundary.hpp"
#include "cubepaths/verify.hpp"

using namespace cubepaths;

namespace {

CubeSet random_set(std::mt19937_64& rng, int n) {
  CubeSet s(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (rng() & 1) s.insert(static_cast<std::uint32_t>(m));
  }
  return s;
}

}  // namespace

TEST_CASE("edge boundaries") {
  CubeSet s1(2, {0b00, 0b01});
  CHECK(edge_boundary(s1).size() == 2);
  CHECK(directed_edge_boundary(s1).size() == 2);

  CubeSet s2(2, {0b00, 0b11});
  CHECK(edge_boundary(s2).size() == 4);
  CHECK(directed_edge_boundary(s2).size() == 2);

  CHECK(edge_boundary(CubeSet::full(3)).size() == 0);
  CHECK(edge_boundary(CubeSet(3)).size() == 0);

  for (const Edge& e : edge_boundary(s2).edges) {
    CHECK(std::popcount(e.u ^ e.v) == 1);
    CHECK((e.u & ~e.v) == 0);  // u subset of v
  }
}

TEST_CASE("edge_between") {
  CubeSet a(2, {0b00});
  CubeSet b(2, {0b01, 0b10});
  CHECK(edge_between(a, b, true).size() == 2);
  CHECK(edge_between(CubeSet(2), CubeSet(2), false).size() == 0);
  CHECK_THROWS_AS(edge_between(CubeSet(2), CubeSet(3), false), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng() % 5);
    CubeSet s = random_set(rng, n);
    CHECK(edge_between(s, s.complement(), false).edges == edge_boundary(s).edges);
  }
}

TEST_CASE("vertex boundaries") {
  CubeSet s1(2, {0b00, 0b01});
  CHECK(vertex_boundary(s1) == CubeSet(2, {0b10, 0b11}));
  CHECK(directed_vertex_boundary(s1) == CubeSet(2, {0b10, 0b11}));

  CubeSet top(2, {0b11});
  CHECK(vertex_boundary(top) == CubeSet(2, {0b01, 0b10}));
  CHECK(directed_vertex_boundary(top).empty());

  CHECK(vertex_boundary(CubeSet::full(3)).empty());
  CHECK(directed_vertex_boundary(CubeSet::full(3)).empty());
}

TEST_CASE("surface") {
  CHECK(surface(CubeSet::full(3)).empty());
  CubeSet s(2, {0b00, 0b01});
  CHECK(surface(s) == s);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng() % 5);
    CubeSet t = random_set(rng, n);
    CHECK(surface(t) == vertex_boundary(t.complement()));
  }
}

TEST_CASE("lower shadow") {
  CHECK(lower_shadow(CubeSet(3, {0b011})) == CubeSet(3, {0b001, 0b010}));
  CHECK(lower_shadow(CubeSet(3, {0b011, 0b101, 0b110})) == CubeSet(3, {0b001, 0b010, 0b100}));
  CHECK(lower_shadow(CubeSet(3, {0b011, 0b101})) == CubeSet(3, {0b001, 0b010, 0b100}));
  CHECK(lower_shadow(CubeSet(3)).empty());
  CHECK_THROWS_AS(lower_shadow(CubeSet(3, {0b001, 0b011})), std::invalid_argument);
  CHECK_THROWS_AS(lower_shadow(CubeSet(3, {0b000})), std::invalid_argument);
}

TEST_CASE("up closure") {
  CHECK(up_closure(CubeSet(2)).empty());
  CHECK(up_closure(CubeSet(2, {0b00})) == CubeSet(2, {0b00, 0b01, 0b10}));
  CHECK(up_closure(CubeSet::full(3)) == CubeSet::full(3));
}

TEST_CASE("crossing edges split by direction, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t families = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t bits = 0; bits < families; ++bits) {
      CubeSet s(n);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (bits & (std::uint64_t{1} << m)) s.insert(static_cast<std::uint32_t>(m));
      }
      REQUIRE(edge_boundary_size(s) ==
              directed_edge_boundary_size(s) + edge_between(s.complement(), s, true).size());
      REQUIRE(edge_boundary(s).size() == edge_boundary_size(s));
      REQUIRE(directed_edge_boundary(s).size() == directed_edge_boundary_size(s));
    }
  }
}

TEST_CASE("down-sets have equal directed and undirected boundaries") {
  auto downs = enumerate_down_sets(4);
  CHECK(downs.size() == 168);
  for (const CubeSet& s : downs) {
    REQUIRE(directed_edge_boundary(s).edges == edge_boundary(s).edges);
    REQUIRE(directed_vertex_boundary(s) == vertex_boundary(s));
  }
}

TEST_CASE("binary initial segment of size 2^k has boundary (n-k)2^k") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CubeSet seg = initial_segment(n, std::uint64_t{1} << k, VertexOrder::binary);
      REQUIRE(edge_boundary_size(seg) ==
              std::uint64_t(n - k) * (std::uint64_t{1} << k));
    }
  }
}

TEST_CASE("isoperimetry spot checks at n = 3") {
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    CubeSet s(3);
    for (std::uint64_t m = 0; m < 8; ++m) {
      if (bits & (std::uint64_t{1} << m)) s.insert(static_cast<std::uint32_t>(m));
    }
    REQUIRE(edge_boundary_size(s) >=
            edge_boundary_size(initial_segment(3, s.size(), VertexOrder::binary)));
    REQUIRE(vertex_boundary_size(s) >=
            vertex_boundary_size(initial_segment(3, s.size(), VertexOrder::simplicial)));
  }
}
