#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expander/graph.hpp"

namespace expander {

enum class SolverMethod { automatic, dense, lanczos, power_deflation };

std::string to_string(SolverMethod m);
SolverMethod parse_solver_method(const std::string& text);

struct SolverOptions {
  SolverMethod method = SolverMethod::automatic;
  double tol = 1e-10;
  std::uint32_t max_iterations = 20000; // matrix-vector products
  std::uint32_t krylov_dim = 120;
  std::uint64_t seed = 0;
  std::uint32_t dense_cutoff = 4000; // automatic: dense at or below
  std::uint32_t report_top = 8;      // eigenvalues listed in the report
  bool throw_on_failure = true;
};

// Spectrum of the Markov operator. lambda_2 is the largest eigenvalue on
// the complement of the constants; lambda_min the smallest; lambda_star =
// max(|lambda_2|, |lambda_min|).
struct SpectralReport {
  SolverMethod method = SolverMethod::dense;
  std::uint32_t vertices = 0;
  std::vector<double> top; // descending, includes lambda_1
  double lambda1 = 1.0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double lambda_star = 0.0;
  double gap = 1.0;
  double residual2 = 0.0;
  double residual_min = 0.0;
  double tol = 0.0;
  std::uint32_t iterations = 0;
  std::uint64_t seed = 0;
  bool converged = true;
  // Unit eigenvector for lambda_2 (dense method and Lanczos).
  std::vector<double> eigvec2;
};

// Throws ConvergenceFailure (when options.throw_on_failure) if an iterative
// method stops above the tolerance.
SpectralReport second_eigenvalue(const ActionGraph& g, const SolverOptions& options = {});

// All eigenvalues (descending) of the dense Markov matrix.
std::vector<double> dense_spectrum(const ActionGraph& g);

struct ProbeResult {
  std::vector<double> ratios;       // ||Delta^t v|| / ||v||, t = 0..power
  std::vector<double> displacement; // ||Delta^t v - v||, t = 0..power
  double step1 = 0.0;               // ||Delta v - v||
  bool telescoping_ok = true;
};

struct ProbeReport {
  std::uint32_t power = 8;
  std::uint64_t seed = 0;
  std::vector<ProbeResult> probes;
  double max_ratio = 0.0;         // max over probes of ratio at `power`
  double max_telescoping_excess = 0.0; // max of ||D^t v - v|| - t ||Dv - v||
};

// Random probes orthogonal to constants from Philox streams 0..probes-1.
ProbeReport delta_power_probe(const ActionGraph& g, std::uint32_t power, std::uint32_t probes,
                              std::uint64_t seed);
// The same, for a given start vector (projected onto the constants' complement).
ProbeResult delta_power_probe_vector(const ActionGraph& g, std::vector<double> v, std::uint32_t power);

} // namespace expander
