#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expander/eigensolver.hpp"
#include "expander/graph.hpp"
#include "expander/perm.hpp"

namespace expander {

// Permutation groups named by a descriptor:
//   cyclic:<N>  rotation of N points
//   alt:<n>     Alt(n) on n points
//   sym:<n>     Sym(n) on n points
std::vector<Permutation> group_generators(const std::string& descriptor);

struct BaselineOptions {
  std::uint32_t set_size = 2;
  std::uint32_t trials = 20;
  std::uint64_t seed = 0;
  // Use every group element instead of random ones (set_size ignored).
  bool all_elements = false;
  bool exclude_identity = true; // only with all_elements
  SolverOptions solver;
  GraphBudget budget;
};

struct BaselineReport {
  std::string descriptor;
  std::string group_order; // decimal
  GraphKind kind = GraphKind::cayley;
  std::uint32_t vertices = 0;
  std::uint32_t set_size = 0;
  std::uint64_t seed = 0;
  std::vector<double> lambda2;
  std::vector<double> gaps;
  std::vector<bool> converged;
  double median_gap = 0.0;
  double min_gap = 0.0;
  double max_gap = 0.0;
  double mean_gap = 0.0;
};

// Trial i draws its generators as random_element(seed, i * set_size + j).
// The Cayley graph is used when the order fits the budget, the point
// action otherwise.
BaselineReport random_cayley_baseline(const std::string& descriptor, const BaselineOptions& options = {});

} // namespace expander
