#include "expander/kazhdan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

#include <Eigen/Dense>

#include "expander/bsgs.hpp"
#include "expander/error.hpp"
#include "expander/rng.hpp"

namespace expander {

namespace {

using Mat = Eigen::MatrixXd;

Mat to_matrix(const std::vector<double>& a, std::uint32_t n)
{
  Mat m(n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      m(i, j) = a[std::size_t{i} * n + j];
  return m;
}

double min_eigenvalue(const Mat& m)
{
  if (m.rows() == 1)
    return m(0, 0);
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

constexpr double golden = 0.6180339887498949;

// Golden-section search for the maximum of a concave function on [0, w].
template <class F>
std::pair<double, double> golden_max(F f, double w, double tol)
{
  double a = 0.0, b = w;
  double c = b - golden * (b - a), d = a + golden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + golden * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - golden * (b - a);
      fc = f(c);
    }
  }
  // Endpoints matter when the maximum sits on a face of the simplex.
  double best_t = 0.5 * (a + b), best = f(best_t);
  for (double t : {0.0, w}) {
    const double v = f(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  return {best_t, best};
}

struct Simplex {
  const std::vector<Mat>& ls;
  double tol;

  // max over p_idx.. >= 0 summing to w of lambda_min(base + sum p_i L_i)
  double solve(std::size_t idx, double w, const Mat& base, std::vector<double>& p) const
  {
    if (idx + 1 == ls.size()) {
      p[idx] = w;
      return min_eigenvalue(base + w * ls[idx]);
    }
    std::vector<double> scratch(p.size());
    auto g = [&](double t) {
      scratch = p;
      return solve(idx + 1, w - t, base + t * ls[idx], scratch);
    };
    const auto [t, value] = golden_max(g, w, tol);
    p[idx] = t;
    solve(idx + 1, w - t, base + t * ls[idx], p);
    return value;
  }
};

// Entropic mirror ascent on the supergradient, for many matrices.
std::pair<double, std::vector<double>> mirror_ascent(const std::vector<Mat>& ls)
{
  const std::size_t k = ls.size();
  std::vector<double> p(k, 1.0 / k), best_p = p;
  double best = -1e300;
  for (int it = 1; it <= 4000; ++it) {
    Mat a = Mat::Zero(ls[0].rows(), ls[0].cols());
    for (std::size_t s = 0; s < k; ++s)
      a += p[s] * ls[s];
    Eigen::SelfAdjointEigenSolver<Mat> es(a);
    const double value = es.eigenvalues()(0);
    if (value > best) {
      best = value;
      best_p = p;
    }
    const Eigen::VectorXd v = es.eigenvectors().col(0);
    const double step = 0.5 / std::sqrt(static_cast<double>(it));
    double z = 0.0;
    for (std::size_t s = 0; s < k; ++s) {
      p[s] *= std::exp(step * v.dot(ls[s] * v));
      z += p[s];
    }
    for (auto& x : p)
      x /= z;
  }
  return {best, best_p};
}

} // namespace

std::pair<double, std::vector<double>> maximize_min_eigenvalue(
    const std::vector<std::vector<double>>& laplacians, std::uint32_t n, double tol)
{
  if (laplacians.empty())
    throw InvalidArgument("need at least one matrix");
  std::vector<Mat> ls;
  for (const auto& l : laplacians)
    ls.push_back(to_matrix(l, n));
  if (ls.size() > 4)
    return mirror_ascent(ls);
  const double level_tol = ls.size() <= 2 ? tol : std::max(tol, 1e-7);
  std::vector<double> p(ls.size(), 0.0);
  Simplex sx{ls, level_tol};
  const double value = sx.solve(0, 1.0, Mat::Zero(n, n), p);
  return {value, p};
}

double minimize_max_quadratic(const std::vector<std::vector<double>>& laplacians, std::uint32_t n,
                              std::uint32_t restarts, std::uint64_t seed, bool* converged)
{
  std::vector<Mat> ls;
  for (const auto& l : laplacians)
    ls.push_back(to_matrix(l, n));
  auto exact = [&](const Eigen::VectorXd& v) {
    double m = -1e300;
    for (const auto& l : ls)
      m = std::max(m, v.dot(l * v));
    return m;
  };
  std::vector<double> finals;
  for (std::uint32_t r = 0; r < std::max(1u, restarts); ++r) {
    PhiloxStream rng(seed, r);
    Eigen::VectorXd v(n);
    for (std::uint32_t i = 0; i < n; ++i)
      v(i) = rng.normal();
    v.normalize();
    for (double beta : {10.0, 100.0, 1e3, 1e4, 1e5}) {
      auto smooth = [&](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
        std::vector<double> g(ls.size());
        double top = -1e300;
        for (std::size_t s = 0; s < ls.size(); ++s) {
          g[s] = x.dot(ls[s] * x);
          top = std::max(top, g[s]);
        }
        double z = 0.0;
        for (auto& gs : g)
          z += std::exp(beta * (gs - top));
        if (grad) {
          grad->setZero(n);
          for (std::size_t s = 0; s < ls.size(); ++s)
            *grad += (std::exp(beta * (g[s] - top)) / z) * 2.0 * (ls[s] * x);
        }
        return top + std::log(z) / beta;
      };
      double step = 0.5;
      for (int it = 0; it < 400; ++it) {
        Eigen::VectorXd grad;
        const double f0 = smooth(v, &grad);
        grad -= grad.dot(v) * v; // tangent component
        if (grad.norm() < 1e-13)
          break;
        bool moved = false;
        while (step > 1e-14) {
          Eigen::VectorXd w = (v - step * grad).normalized();
          if (smooth(w, nullptr) < f0 - 1e-4 * step * grad.squaredNorm()) {
            v = w;
            moved = true;
            step *= 2.0;
            break;
          }
          step *= 0.5;
        }
        if (!moved)
          break;
      }
    }
    finals.push_back(exact(v));
  }
  std::sort(finals.begin(), finals.end());
  if (converged)
    *converged = finals.size() < 2 || finals[1] - finals[0] <= 1e-6;
  return finals.front();
}

KazhdanReport kazhdan_numeric(const std::vector<Permutation>& gens, const KazhdanOptions& options)
{
  if (gens.empty())
    throw InvalidArgument("kazhdan_numeric needs generators");
  const Bsgs group = Bsgs::build(gens);
  if (group.order() > options.max_order)
    throw InvalidArgument("kazhdan_numeric is restricted to groups of order <= " +
                          std::to_string(options.max_order) + " (got " + to_decimal(group.order()) + ")");
  const auto n = static_cast<std::uint32_t>(group.order());
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::uint32_t i = 0; i < n; ++i) {
    elements.push_back(group.element(i));
    index.emplace(elements.back(), i);
  }
  // right_mult[g][i] = index of elements[i] * elements[g]
  std::vector<std::vector<std::uint32_t>> right_mult(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t i = 0; i < n; ++i)
      right_mult[g][i] = index.at(compose(elements[i], elements[g]));

  std::vector<Permutation> distinct;
  for (const auto& s : gens)
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end())
      distinct.push_back(s);
  std::vector<Mat> lap; // L_s = 2I - P_s - P_s^T on the regular representation
  for (const auto& s : distinct) {
    const auto& sigma = right_mult[index.at(s)];
    Mat l = 2.0 * Mat::Identity(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      l(i, sigma[i]) -= 1.0;
      l(sigma[i], i) -= 1.0;
    }
    lap.push_back(std::move(l));
  }

  KazhdanReport report;
  report.order = n;
  report.generators = static_cast<std::uint32_t>(distinct.size());
  report.seed = options.seed;
  if (n == 1) {
    // No nontrivial representation appears; the infimum is over nothing.
    report.kazhdan = 2.0;
    report.per_irrep_min = 2.0;
    return report;
  }

  auto flatten = [](const Mat& m) {
    std::vector<double> out(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        out[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
    return out;
  };

  {
    const Mat shift = Mat::Constant(n, n, 5.0 / n); // lifts the constants above the spectrum
    std::vector<std::vector<double>> ls;
    for (const auto& l : lap)
      ls.push_back(flatten(l + shift));
    auto [value, p] = maximize_min_eigenvalue(ls, n, options.tol);
    report.kazhdan = std::sqrt(std::max(0.0, value));
    report.weights = p;
  }

  // Real-irreducible blocks from the eigenspaces of a random symmetric
  // element of the commutant.
  std::vector<Mat> blocks;
  for (std::uint64_t attempt = 0; attempt < 8 && blocks.empty(); ++attempt) {
    PhiloxStream rng(options.seed, 0x6b617a68ull + attempt);
    Mat x(n, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j <= i; ++j)
        x(i, j) = x(j, i) = rng.normal();
    Mat avg = Mat::Zero(n, n);
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto& sigma = right_mult[g];
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          avg(i, j) += x(sigma[i], sigma[j]);
    }
    avg /= n;
    Eigen::SelfAdjointEigenSolver<Mat> es(avg);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<Mat> found;
    Eigen::Index start = 0;
    bool ok = true;
    for (Eigen::Index i = 1; i <= static_cast<Eigen::Index>(n); ++i) {
      if (i < static_cast<Eigen::Index>(n) && ev(i) - ev(i - 1) < 1e-8 * scale)
        continue;
      Mat q = es.eigenvectors().middleCols(start, i - start);
      double frob = 0.0;
      for (std::uint32_t g = 0; g < n; ++g) {
        double chi = 0.0;
        for (Eigen::Index c = 0; c < q.cols(); ++c)
          for (std::uint32_t r = 0; r < n; ++r)
            chi += q(r, c) * q(right_mult[g][r], c);
        frob += chi * chi;
      }
      frob /= n;
      const double rounded = std::round(frob);
      if (std::abs(frob - rounded) > 1e-6 || (rounded != 1 && rounded != 2 && rounded != 4))
        ok = false;
      found.push_back(std::move(q));
      start = i;
    }
    if (ok)
      blocks = std::move(found);
  }
  if (blocks.empty())
    throw ConvergenceFailure("could not split the regular representation into irreducibles", 0.0);

  struct Entry {
    std::vector<long long> key;
    IrrepEstimate est;
    Mat basis;
  };
  std::map<std::pair<std::uint32_t, std::vector<long long>>, Entry> classes;
  for (const auto& q : blocks) {
    std::vector<double> chi(n, 0.0);
    for (std::uint32_t g = 0; g < n; ++g)
      for (Eigen::Index c = 0; c < q.cols(); ++c)
        for (std::uint32_t r = 0; r < n; ++r)
          chi[g] += q(r, c) * q(right_mult[g][r], c);
    const auto dim = static_cast<std::uint32_t>(q.cols());
    bool trivial = dim == 1;
    for (double c : chi)
      trivial = trivial && std::abs(c - 1.0) < 1e-6;
    if (trivial)
      continue;
    std::vector<long long> key;
    for (double c : chi)
      key.push_back(std::llround(c * 1e6));
    auto [it, inserted] = classes.try_emplace({dim, key});
    if (inserted) {
      double frob = 0.0;
      for (double c : chi)
        frob += c * c;
      it->second.est.dim = dim;
      it->second.est.frobenius = static_cast<std::uint32_t>(std::lround(frob / n));
      it->second.est.character = chi;
      it->second.basis = q;
    }
    ++it->second.est.multiplicity;
  }

  report.per_irrep_min = 1e300;
  std::uint32_t label = 0;
  double best_mixed = 1e300;
  for (auto& [key, entry] : classes) {
    IrrepEstimate est = entry.est;
    est.label = "rho" + std::to_string(++label);
    std::vector<std::vector<double>> ls;
    for (const auto& l : lap)
      ls.push_back(flatten(entry.basis.transpose() * l * entry.basis));
    bool conv = true;
    est.pure = std::sqrt(std::max(0.0, minimize_max_quadratic(ls, est.dim, options.restarts,
                                                              options.seed + label, &conv)));
    est.converged = conv;
    est.mixed = std::sqrt(std::max(0.0, maximize_min_eigenvalue(ls, est.dim, options.tol).first));
    report.converged = report.converged && conv;
    if (est.mixed < best_mixed - 1e-12 ||
        (std::abs(est.mixed - best_mixed) <= 1e-12 && est.pure < report.per_irrep_min)) {
      best_mixed = est.mixed;
      report.argmin_label = est.label;
    }
    report.per_irrep_min = std::min(report.per_irrep_min, est.pure);
    report.irreps.push_back(std::move(est));
  }
  return report;
}

} // namespace expander
