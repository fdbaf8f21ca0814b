#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cubepaths/cube_set.hpp"
#include "cubepaths/json_io.hpp"

namespace cubepaths {

// One theorem-instance check: inputs, computed numbers and witnesses, verdict.
struct Certificate {
  std::string theorem_id;
  Json instance;
  Json computed;
  bool pass = true;
  std::string seed = "exhaustive";

  Json to_json() const;
};

enum class SweepStrategy { exhaustive, random };

struct SweepPlan {
  std::string theorem_id;
  int n = 3;
  SweepStrategy strategy = SweepStrategy::exhaustive;
  std::uint64_t count = 0;  // random only
  std::uint64_t seed = 0;   // random only
  bool fail_fast = false;
};

struct SweepSummary {
  std::uint64_t total = 0;
  std::uint64_t failures = 0;
};

const std::vector<std::string>& known_theorems();

// Every down-set of P[n] exactly once; counts 3, 6, 20, 168, 7581 for n = 1..5.
std::vector<CubeSet> enumerate_down_sets(int n);

enum class InstanceShape { disjoint_pair, down_up_pair, between_set, level_family };

struct RandomInstance {
  int n = 1;
  CubeSet A, B, S;
  int r = 0;  // level_family only
};

// Deterministic in (n, shape, seed). Throws after 10,000 failed rejection draws.
RandomInstance random_instance(int n, InstanceShape shape, std::uint64_t seed);

// Runs one instance of a theorem check; instance JSON as produced by the sweeps.
Certificate check_instance(const std::string& theorem_id, const Json& instance,
                           const std::string& seed_label = "exhaustive");

// Streams one certificate per instance into sink. With fail_fast set, stops
// after the first failure (which is still emitted).
SweepSummary run_theorem(const SweepPlan& plan, const std::function<void(const Certificate&)>& sink);

std::vector<Certificate> run_theorem(const SweepPlan& plan);

// Default plans: per theorem one exhaustive sweep at small n and one seeded
// random sweep at a larger n.
std::vector<SweepPlan> default_suite();

// Exhaustive minimum vertex cut separating A from B in Q_n - F (direct A-B
// edges removed), over cut sets drawn from the interior vertices.
std::uint64_t brute_min_vertex_cut(const CubeSet& a, const CubeSet& b, bool directed);

// Sweeps disjoint non-empty pairs of Q_n that are not (down-set, up-set) pairs
// and records how often the directed edge-disjoint count falls strictly below
// the undirected one. Demonstrates that the down/up hypotheses matter.
struct NegativeControl {
  std::uint64_t pairs_checked = 0;
  std::uint64_t strict_count = 0;
  bool found = false;
  Json witness;  // first strict instance
};

NegativeControl negative_control_sweep(int n);

// Worker count for instance sweeps: CUBEPATHS_THREADS or hardware concurrency.
int worker_count();

}  // namespace cubepaths
