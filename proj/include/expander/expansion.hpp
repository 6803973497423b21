#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expander/eigensolver.hpp"
#include "expander/graph.hpp"

namespace expander {

// Vertex expansion: min over nonempty A, |A| <= |V|/2, of |boundary(A)|/|A|,
// where boundary(A) is the set of vertices outside A adjacent to A.
struct ExpansionReport {
  bool exact = false;
  std::uint32_t boundary = 0; // exact case: epsilon = boundary / size
  std::uint32_t size = 0;
  double epsilon = 0.0;
  std::vector<std::uint32_t> witness;
  bool has_interval = false;
  double lower = 0.0;
  double upper = 0.0;
};

constexpr std::uint32_t brute_force_vertex_cap = 22;

// Exhaustive over all subsets; throws BudgetExceeded above the cap.
ExpansionReport brute_force_expansion(const ActionGraph& g);

// |boundary(A)| for an explicit vertex set.
std::uint32_t vertex_boundary(const ActionGraph& g, const std::vector<std::uint32_t>& set);

// For a D-regular multigraph (D = generator multiset size),
// |boundary(A)| <= e(A, A^c) <= D |boundary(A)| turns the edge Cheeger
// inequality (1 - lambda_2)/2 <= h_e / D <= sqrt(2 (1 - lambda_2)) into
// (1 - lambda_2)/2 <= eps <= D sqrt(2 (1 - lambda_2)).
ExpansionReport cheeger_interval(const SpectralReport& report, std::uint32_t degree);

// Expansion from a Kazhdan constant: eps_0 >= K^2 / 4. Throws InvalidArgument unless
// K lies in (0, 2].
double kazhdan_to_expansion(double kazhdan);

} // namespace expander
