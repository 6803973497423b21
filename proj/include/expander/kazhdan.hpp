#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expander/perm.hpp"

namespace expander {

struct KazhdanOptions {
  std::uint64_t seed = 0;
  std::uint32_t restarts = 16;
  std::uint32_t max_order = 60;
  double tol = 1e-9;
};

// One real-irreducible constituent of the regular representation.
struct IrrepEstimate {
  std::string label;        // "rho<k>", ordered by (dimension, character)
  std::uint32_t dim = 0;    // real dimension
  std::uint32_t frobenius = 0; // <chi, chi>: 1 real, 2 complex, 4 quaternionic type
  std::uint32_t multiplicity = 0;
  std::vector<double> character; // on the group elements in BSGS index order
  // min over unit real v of max_s ||rho(s) v - v||, multistart descent
  double pure = 0.0;
  // the same minimum over all states on the isotypic component (mixtures
  // of vectors, i.e. arbitrary multiplicity), computed by minimax
  double mixed = 0.0;
  bool converged = true;
};

struct KazhdanReport {
  std::uint32_t order = 0;
  std::uint32_t generators = 0;
  // K(G;S) = inf over unitary representations without invariant vectors
  // of max_s ||rho(s) v - v|| / ||v||.
  double kazhdan = 0.0;
  std::vector<double> weights; // optimal simplex weights in the minimax
  double per_irrep_min = 0.0;  // min over irreps of the pure estimate
  std::string argmin_label;
  std::vector<IrrepEstimate> irreps; // nontrivial only
  std::uint64_t seed = 0;
  bool converged = true;
};

// Throws InvalidArgument when |<gens>| exceeds options.max_order.
KazhdanReport kazhdan_numeric(const std::vector<Permutation>& gens, const KazhdanOptions& options = {});

// max over the simplex of lambda_min(sum_s p_s L_s) for symmetric PSD
// matrices L_s (dense, row-major, all n x n). Returns the value and the
// maximizer. Exact up to golden-section tolerance for up to four matrices.
std::pair<double, std::vector<double>> maximize_min_eigenvalue(
    const std::vector<std::vector<double>>& laplacians, std::uint32_t n, double tol = 1e-10);

// min over unit v of max_s v^T L_s v by multistart smoothed descent.
double minimize_max_quadratic(const std::vector<std::vector<double>>& laplacians, std::uint32_t n,
                              std::uint32_t restarts, std::uint64_t seed, bool* converged = nullptr);

} // namespace expander
