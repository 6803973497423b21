#include "expander/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "expander/error.hpp"
#include "expander/rng.hpp"

namespace expander {

std::string to_string(SolverMethod m)
{
  switch (m) {
  case SolverMethod::automatic: return "automatic";
  case SolverMethod::dense: return "dense";
  case SolverMethod::lanczos: return "lanczos";
  case SolverMethod::power_deflation: return "power-deflation";
  }
  return "automatic";
}

SolverMethod parse_solver_method(const std::string& text)
{
  for (auto m : {SolverMethod::automatic, SolverMethod::dense, SolverMethod::lanczos,
                 SolverMethod::power_deflation})
    if (to_string(m) == text)
      return m;
  if (text == "power")
    return SolverMethod::power_deflation;
  throw InvalidArgument("unknown solver method '" + text + "'");
}

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b)
{
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

void remove_mean(Vec& a)
{
  const double mean = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
  for (auto& x : a)
    x -= mean;
}

void scale(Vec& a, double s)
{
  for (auto& x : a)
    x *= s;
}

Vec random_start(std::uint32_t n, std::uint64_t seed, std::uint64_t stream)
{
  PhiloxStream rng(seed, stream);
  Vec v(n);
  for (auto& x : v)
    x = rng.normal();
  remove_mean(v);
  scale(v, 1.0 / norm(v));
  return v;
}

double residual_of(const ActionGraph& g, const Vec& x, double theta)
{
  Vec y = g.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] -= theta * x[i];
  return norm(y);
}

struct Extreme {
  double value = 0.0;
  Vec vector;
  double residual = 0.0;
  std::uint32_t matvecs = 0;
  bool converged = false;
};

// Lanczos on the complement of the constants with full reorthogonalization
// and explicit restart from the current Ritz vector.
Extreme lanczos_extreme(const ActionGraph& g, bool largest, const SolverOptions& opt,
                        std::uint64_t stream)
{
  const std::uint32_t n = g.vertices();
  const std::uint32_t m = std::max<std::uint32_t>(2, std::min<std::uint32_t>(opt.krylov_dim, n - 1));
  Extreme best;
  Vec start = random_start(n, opt.seed, stream);
  while (best.matvecs < opt.max_iterations) {
    std::vector<Vec> basis{start};
    std::vector<double> alpha, beta;
    bool invariant = false;
    for (std::uint32_t j = 0; j < m; ++j) {
      Vec w = g.apply(basis[j]);
      ++best.matvecs;
      remove_mean(w);
      alpha.push_back(dot(w, basis[j]));
      const double wnorm = norm(w);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
          const double c = dot(w, b);
          for (std::size_t i = 0; i < n; ++i)
            w[i] -= c * b[i];
        }
      // round-off left after orthogonalization must not be promoted to a
      // basis vector: it carries a constant component
      remove_mean(w);
      const double bnorm = norm(w);
      const bool breakdown = bnorm <= 1e-10 * std::max(wnorm, 1e-300);
      if (breakdown || j + 1 == m) {
        invariant = breakdown;
        beta.push_back(bnorm);
        break;
      }
      beta.push_back(bnorm);
      scale(w, 1.0 / bnorm);
      basis.push_back(std::move(w));
    }
    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < k)
        t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const Eigen::Index pick = largest ? k - 1 : 0;
    Vec x(n, 0.0);
    for (Eigen::Index i = 0; i < k; ++i) {
      const double c = es.eigenvectors()(i, pick);
      for (std::size_t r = 0; r < n; ++r)
        x[r] += c * basis[i][r];
    }
    remove_mean(x);
    scale(x, 1.0 / norm(x));
    const double theta_x = dot(x, g.apply(x));
    const double res = residual_of(g, x, theta_x);
    best.matvecs += 2;
    best.value = theta_x;
    best.vector = x;
    best.residual = res;
    if (res <= opt.tol || invariant) {
      best.converged = res <= std::max(opt.tol, 1e-12);
      return best;
    }
    start = std::move(x);
  }
  return best;
}

// Power iteration on (I + s Delta) / 2 restricted to the complement of the
// constants; s = +1 targets lambda_2, s = -1 targets lambda_min.
Extreme power_extreme(const ActionGraph& g, bool largest, const SolverOptions& opt,
                      std::uint64_t stream)
{
  const double s = largest ? 1.0 : -1.0;
  Extreme best;
  Vec x = random_start(g.vertices(), opt.seed, stream);
  Vec y;
  while (best.matvecs < opt.max_iterations) {
    g.apply(x, y);
    ++best.matvecs;
    const double theta = dot(x, y);
    double res2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - theta * x[i];
      res2 += r * r;
    }
    best.value = theta;
    best.vector = x;
    best.residual = std::sqrt(res2);
    if (best.residual <= opt.tol) {
      best.converged = true;
      return best;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = 0.5 * (x[i] + s * y[i]);
    remove_mean(x);
    const double nx = norm(x);
    if (nx < 1e-300) {
      best.converged = true; // Delta = -s I on the complement
      return best;
    }
    scale(x, 1.0 / nx);
  }
  return best;
}

SpectralReport dense_report(const ActionGraph& g, const SolverOptions& opt)
{
  const std::uint32_t n = g.vertices();
  const auto a = g.dense_markov();
  Eigen::MatrixXd m(n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      m(i, j) = 0.5 * (a[std::size_t{i} * n + j] + a[std::size_t{j} * n + i]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("dense eigensolver failed", 0.0);
  const auto& ev = es.eigenvalues(); // ascending
  SpectralReport r;
  r.method = SolverMethod::dense;
  r.vertices = n;
  r.tol = opt.tol;
  r.seed = opt.seed;
  for (std::uint32_t k = 0; k < std::min(opt.report_top, n); ++k)
    r.top.push_back(ev(n - 1 - k));
  r.lambda1 = ev(n - 1);
  r.lambda2 = ev(n - 2);
  r.lambda_min = ev(0);
  Vec v2(n), vmin(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    v2[i] = es.eigenvectors()(i, n - 2);
    vmin[i] = es.eigenvectors()(i, 0);
  }
  remove_mean(v2);
  if (norm(v2) > 1e-8)
    scale(v2, 1.0 / norm(v2));
  r.residual2 = residual_of(g, v2, r.lambda2);
  r.residual_min = residual_of(g, vmin, r.lambda_min);
  r.eigvec2 = std::move(v2);
  return r;
}

} // namespace

std::vector<double> dense_spectrum(const ActionGraph& g)
{
  SolverOptions opt;
  opt.report_top = g.vertices();
  return dense_report(g, opt).top;
}

SpectralReport second_eigenvalue(const ActionGraph& g, const SolverOptions& options)
{
  if (g.vertices() < 2)
    throw InvalidArgument("spectral gap needs at least two vertices");
  SolverMethod method = options.method;
  if (method == SolverMethod::automatic)
    method = g.vertices() <= options.dense_cutoff ? SolverMethod::dense : SolverMethod::lanczos;
  SpectralReport r;
  if (method == SolverMethod::dense) {
    r = dense_report(g, options);
  } else {
    const bool lanczos = method == SolverMethod::lanczos;
    Extreme top = lanczos ? lanczos_extreme(g, true, options, 0) : power_extreme(g, true, options, 0);
    Extreme bottom =
        lanczos ? lanczos_extreme(g, false, options, 1) : power_extreme(g, false, options, 1);
    r.method = method;
    r.vertices = g.vertices();
    r.tol = options.tol;
    r.seed = options.seed;
    r.lambda1 = 1.0;
    r.lambda2 = top.value;
    r.lambda_min = bottom.value;
    r.residual2 = top.residual;
    r.residual_min = bottom.residual;
    r.iterations = top.matvecs + bottom.matvecs;
    r.converged = top.converged && bottom.converged;
    r.top = {1.0, r.lambda2};
    r.eigvec2 = std::move(top.vector);
    if (!r.converged && options.throw_on_failure)
      throw ConvergenceFailure(to_string(method) + " did not reach tolerance " +
                                   std::to_string(options.tol) + " within " +
                                   std::to_string(options.max_iterations) + " iterations",
                               std::max(r.residual2, r.residual_min));
  }
  r.lambda_star = std::max(std::abs(r.lambda2), std::abs(r.lambda_min));
  r.gap = 1.0 - r.lambda2;
  return r;
}

ProbeResult delta_power_probe_vector(const ActionGraph& g, std::vector<double> v, std::uint32_t power)
{
  if (v.size() != g.vertices())
    throw InvalidArgument("probe vector has the wrong length");
  remove_mean(v);
  const double nv = norm(v);
  if (nv == 0.0)
    throw InvalidArgument("probe vector vanishes on the constants' complement");
  scale(v, 1.0 / nv);
  ProbeResult p;
  Vec x = v;
  p.ratios.push_back(1.0);
  p.displacement.push_back(0.0);
  Vec y;
  for (std::uint32_t t = 1; t <= power; ++t) {
    g.apply(x, y);
    x.swap(y);
    p.ratios.push_back(norm(x));
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      d2 += (x[i] - v[i]) * (x[i] - v[i]);
    p.displacement.push_back(std::sqrt(d2));
  }
  p.step1 = power >= 1 ? p.displacement[1] : 0.0;
  for (std::uint32_t t = 1; t <= power; ++t)
    if (p.displacement[t] > t * p.step1 + 1e-12)
      p.telescoping_ok = false;
  return p;
}

ProbeReport delta_power_probe(const ActionGraph& g, std::uint32_t power, std::uint32_t probes,
                              std::uint64_t seed)
{
  ProbeReport r;
  r.power = power;
  r.seed = seed;
  for (std::uint32_t j = 0; j < probes; ++j) {
    PhiloxStream rng(seed, j);
    Vec v(g.vertices());
    for (auto& x : v)
      x = rng.normal();
    auto p = delta_power_probe_vector(g, std::move(v), power);
    r.max_ratio = std::max(r.max_ratio, p.ratios.back());
    for (std::uint32_t t = 1; t <= power; ++t)
      r.max_telescoping_excess =
          std::max(r.max_telescoping_excess, p.displacement[t] - t * p.step1);
    r.probes.push_back(std::move(p));
  }
  return r;
}

} // namespace expander
