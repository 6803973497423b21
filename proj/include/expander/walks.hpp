#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expander/construction.hpp"
#include "expander/eigensolver.hpp"
#include "expander/graph.hpp"
#include "expander/perm.hpp"

namespace expander {

// Product of `length` uniform picks from inverse_closure(family), applied
// left to right. Pick k is Philox(seed, stream).below(offset + k, size), so
// random_word(a + b, s, j) == compose(random_word(a, s, j, 0),
//                                     random_word(b, s, j, a)).
Permutation random_word(const std::vector<Permutation>& family, std::uint64_t length,
                        std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t offset = 0);

// ceil(8 n ln n)
std::uint64_t default_word_length(std::uint32_t n);

struct MixingReport {
  std::uint32_t points = 0;
  std::uint32_t start = 0;
  std::vector<double> tv;         // TV(t), t = 0..steps
  std::vector<double> prediction; // lambda_star^t sqrt(N)
  double lambda2 = 0.0;
  double lambda_star = 0.0;
  std::optional<std::uint32_t> first_below; // first t with TV < threshold
  double threshold = 0.01;
  bool monotone = true;       // non-increasing up to 1e-12
  bool within_spectral = true; // TV(t) <= prediction(t) + 1e-9
};

constexpr std::uint64_t mixing_point_budget = 1u << 22;

// Exact evolution of the marked-point distribution from a delta at `start`.
MixingReport point_mixing_exact(const std::vector<Permutation>& family, std::uint32_t steps,
                                std::uint32_t start = 0, double threshold = 0.01,
                                const SolverOptions& solver = {});

struct CycleStatistics {
  std::uint32_t degree = 0;
  std::uint64_t length = 0;
  std::uint32_t samples = 0;
  std::uint64_t seed = 0;
  double fixed_mean = 0.0;
  double fixed_variance = 0.0;
  double fixed_stderr = 0.0;
  double cycles_mean = 0.0;
  double cycles_stderr = 0.0;
  // Uniform Sym(n)/Alt(n) reference values: 1 and the harmonic number H_n.
  double reference_fixed_mean = 1.0;
  double reference_cycles_mean = 0.0;
};

// Sample j is random_word(family, length, seed, j).
CycleStatistics cycle_statistics(const std::vector<Permutation>& family, std::uint64_t length,
                                 std::uint32_t samples, std::uint64_t seed);

// One router move: the element pi_axis(cycle^exponents) of Gamma_bar_axis.
struct RouteMove {
  std::uint32_t axis = 0;
  std::vector<std::uint32_t> exponents;
};

// Greedy coordinate matching, last axis first; on a collision (two points
// of one fiber needing different shifts) a single separating move on
// another axis is tried first (backtracking depth 1). The result does not
// depend on any move budget. Empty optional: not routable.
std::optional<std::vector<RouteMove>> route_tuple(const CubeIndex& cube, const LocalGroup& h,
                                                  const std::vector<Point>& source,
                                                  const std::vector<Point>& target);

struct TransitivityProbe {
  std::uint32_t r = 0;
  std::vector<std::uint32_t> t;
  std::vector<double> kappa; // per entry of t
  std::uint32_t pairs = 0;
  std::uint64_t seed = 0;
  std::vector<int> moves; // per pair; -1 when the router failed
  bool verified = true;   // every route checked with the actual permutations
};

// Pair j: source and target r-tuples of distinct points from stream j.
TransitivityProbe transitivity_probe(const CubeIndex& cube, const LocalGroup& h, std::uint32_t r,
                                     const std::vector<std::uint32_t>& t, std::uint32_t pairs,
                                     std::uint64_t seed);

// Same, over explicit pairs.
TransitivityProbe transitivity_probe_pairs(
    const CubeIndex& cube, const LocalGroup& h,
    const std::vector<std::pair<std::vector<Point>, std::vector<Point>>>& pairs,
    const std::vector<std::uint32_t>& t);

} // namespace expander
