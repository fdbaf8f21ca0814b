#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <bit>
#include <set>

#include "cubepaths/verify.hpp"

using namespace cubepaths;

TEST_CASE("down-set enumeration counts") {
  CHECK(enumerate_down_sets(1).size() == 3);
  CHECK(enumerate_down_sets(2).size() == 6);
  CHECK(enumerate_down_sets(3).size() == 20);
  CHECK(enumerate_down_sets(4).size() == 168);
  CHECK(enumerate_down_sets(5).size() == 7581);
  CHECK_THROWS_AS(enumerate_down_sets(6), std::invalid_argument);

  for (int n = 1; n <= 4; ++n) {
    auto downs = enumerate_down_sets(n);
    std::set<std::vector<std::uint32_t>> seen;
    for (const CubeSet& s : downs) {
      REQUIRE(is_down_set(s));
      REQUIRE(seen.insert(s.members()).second);
    }
  }
}

TEST_CASE("random instances are deterministic and well-shaped") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    RandomInstance a = random_instance(3, InstanceShape::down_up_pair, seed);
    RandomInstance b = random_instance(3, InstanceShape::down_up_pair, seed);
    REQUIRE(a.A == b.A);
    REQUIRE(a.B == b.B);
    REQUIRE(is_down_set(a.A));
    REQUIRE(is_up_set(a.B));
    REQUIRE_FALSE(a.A.empty());
    REQUIRE_FALSE(a.B.empty());
    REQUIRE_FALSE(a.A.intersects(a.B));
  }

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomInstance p = random_instance(4, InstanceShape::disjoint_pair, seed);
    REQUIRE_FALSE(p.A.empty());
    REQUIRE_FALSE(p.B.empty());
    REQUIRE_FALSE(p.A.intersects(p.B));

    RandomInstance s = random_instance(4, InstanceShape::between_set, seed);
    REQUIRE(s.A.subset_of(s.S));
    REQUIRE_FALSE(s.S.intersects(s.B));

    RandomInstance lvl = random_instance(4, InstanceShape::level_family, seed);
    REQUIRE_FALSE(lvl.A.empty());
    lvl.A.for_each([&](std::uint32_t m) { REQUIRE(std::popcount(m) == lvl.r); });
  }

  CHECK_THROWS_AS(random_instance(0, InstanceShape::disjoint_pair, 1), std::invalid_argument);
}

TEST_CASE("theorem catalogue") {
  const auto& ids = known_theorems();
  CHECK(ids.size() == 16);
  CHECK(std::count(ids.begin(), ids.end(), "diredges") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "weakKK") == 1);
  CHECK_THROWS_AS(check_instance("nosuch", Json{{"n", 2}}), std::invalid_argument);
}

TEST_CASE("exhaustive sweeps pass for every theorem at small n") {
  struct Case {
    const char* id;
    int n;
    std::uint64_t expected_total;
  };
  // Totals pin the instance generators, not just the verdicts.
  std::vector<Case> cases = {
      {"diredges", 2, 9},      {"directedvertices", 2, 9},
      {"diredgeiso", 2, 9},    {"edgelemma", 2, 50},
      {"vertexobs", 2, 50},    {"bledgesfull", 2, 50},
      {"blfullvertices", 2, 50},
      {"matchings", 2, 11},    {"weakKK", 2, 4},
      {"edgeiso", 2, 16},      {"vertexiso", 2, 16},
      {"preservesdownness", 2, 64},
      {"compressionreducesoutedges", 2, 32},
      {"compressionreducesupneighbours", 2, 32},
  };
  for (const Case& c : cases) {
    CAPTURE(c.id);
    SweepPlan plan{c.id, c.n, SweepStrategy::exhaustive, 0, 0, false};
    std::uint64_t seen = 0;
    SweepSummary summary = run_theorem(plan, [&](const Certificate& cert) {
      ++seen;
      REQUIRE(cert.pass);
      REQUIRE(cert.theorem_id == c.id);
      REQUIRE(cert.seed == "exhaustive");
    });
    REQUIRE(summary.failures == 0);
    REQUIRE(summary.total == c.expected_total);
    REQUIRE(seen == summary.total);
  }
}

TEST_CASE("sandwich sweeps pass at n = 2") {
  for (const char* id : {"dirvertexiso", "containments"}) {
    SweepPlan plan{id, 2, SweepStrategy::exhaustive, 0, 0, false};
    SweepSummary summary = run_theorem(plan, [](const Certificate&) {});
    REQUIRE(summary.failures == 0);
    REQUIRE(summary.total > 0);
  }
}

TEST_CASE("random sweeps are reproducible and pass") {
  for (const std::string& id : known_theorems()) {
    CAPTURE(id);
    SweepPlan plan{id, 4, SweepStrategy::random, 25, 777, false};
    auto first = run_theorem(plan);
    auto second = run_theorem(plan);
    REQUIRE(first.size() == 25);
    REQUIRE(second.size() == 25);
    for (std::size_t k = 0; k < first.size(); ++k) {
      REQUIRE(first[k].pass);
      REQUIRE(first[k].instance == second[k].instance);
      REQUIRE(first[k].computed == second[k].computed);
      REQUIRE(first[k].seed == second[k].seed);
    }
  }
}

TEST_CASE("certificates re-check to the same verdict") {
  SweepPlan plan{"diredges", 3, SweepStrategy::exhaustive, 0, 0, false};
  auto certs = run_theorem(plan);
  REQUIRE_FALSE(certs.empty());
  for (std::size_t k = 0; k < std::min<std::size_t>(certs.size(), 40); ++k) {
    Certificate again = check_instance(certs[k].theorem_id, certs[k].instance);
    REQUIRE(again.pass == certs[k].pass);
    REQUIRE(again.computed == certs[k].computed);
  }
  Json j = certs[0].to_json();
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("theorem") == "diredges");
  CHECK(j.at("seed") == "exhaustive");
}

TEST_CASE("default suite covers every theorem with both strategies") {
  auto plans = default_suite();
  std::set<std::string> exhaustive_ids, random_ids;
  for (const SweepPlan& p : plans) {
    if (p.strategy == SweepStrategy::exhaustive) {
      exhaustive_ids.insert(p.theorem_id);
    } else {
      random_ids.insert(p.theorem_id);
      CHECK(p.count > 0);
    }
  }
  for (const std::string& id : known_theorems()) {
    CHECK(exhaustive_ids.count(id) == 1);
    CHECK(random_ids.count(id) == 1);
  }
}

TEST_CASE("brute vertex cut sanity") {
  CubeSet a(2, {0b00});
  CubeSet b(2, {0b11});
  CHECK(brute_min_vertex_cut(a, b, false) == 2);
  CHECK(brute_min_vertex_cut(a, b, true) == 2);

  CubeSet af(2, {0b00, 0b01});
  CubeSet bf(2, {0b10, 0b11});
  CHECK(brute_min_vertex_cut(af, bf, false) == 0);  // only F-edges connect them
}

TEST_CASE("direction hypotheses matter: strict gap exists at n = 3") {
  NegativeControl nc = negative_control_sweep(3);
  CHECK(nc.found);
  CHECK(nc.strict_count >= 1);
  CHECK(nc.pairs_checked > 0);
  REQUIRE(nc.witness.contains("p_e"));
  std::uint64_t pe = nc.witness.at("p_e").get<std::uint64_t>();
  std::uint64_t pde = nc.witness.at("p_dir_e").get<std::uint64_t>();
  CHECK(pde < pe);
}

TEST_CASE("worker count is positive") {
  CHECK(worker_count() >= 1);
}
