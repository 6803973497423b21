#include "expander/baseline.hpp"

#include <algorithm>
#include <numeric>

#include "expander/bsgs.hpp"
#include "expander/error.hpp"

namespace expander {

std::vector<Permutation> group_generators(const std::string& descriptor)
{
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    throw InvalidArgument("group descriptor '" + descriptor + "' needs the form kind:n");
  const std::string kind = descriptor.substr(0, colon);
  std::uint32_t n = 0;
  try {
    n = static_cast<std::uint32_t>(std::stoul(descriptor.substr(colon + 1)));
  } catch (const std::exception&) {
    throw InvalidArgument("group descriptor '" + descriptor + "' has no valid degree");
  }
  std::vector<Point> rotation(n);
  for (std::uint32_t i = 0; i < n; ++i)
    rotation[i] = (i + 1) % n;
  if (kind == "cyclic") {
    if (n < 2)
      throw InvalidArgument("cyclic group needs N >= 2");
    return {Permutation(rotation)};
  }
  if (kind == "sym") {
    if (n < 2)
      throw InvalidArgument("sym needs n >= 2");
    return {Permutation::from_cycles(n, {{0, 1}}), Permutation(rotation)};
  }
  if (kind == "alt") {
    if (n < 3)
      throw InvalidArgument("alt needs n >= 3");
    if (n == 3)
      return {Permutation::from_cycles(3, {{0, 1, 2}})};
    // (0 1 2) with an (n or n-1)-cycle of even parity
    std::vector<Point> cyc;
    for (Point i = n % 2 ? 0 : 1; i < n; ++i)
      cyc.push_back(i);
    return {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cyc})};
  }
  throw InvalidArgument("unknown group kind '" + kind + "'");
}

BaselineReport random_cayley_baseline(const std::string& descriptor, const BaselineOptions& options)
{
  const auto gens = group_generators(descriptor);
  BsgsOptions bo;
  bo.seed = options.seed;
  const Bsgs group = Bsgs::build(gens, bo);
  BaselineReport r;
  r.descriptor = descriptor;
  r.group_order = to_decimal(group.order());
  r.seed = options.seed;
  r.kind = group.order() <= options.budget.max_cayley_order ? GraphKind::cayley
                                                            : GraphKind::schreier_points;

  auto measure = [&](const std::vector<Permutation>& set) {
    const ActionGraph g = build_action_graph(set, r.kind, 1, options.budget);
    r.vertices = g.vertices();
    SolverOptions so = options.solver;
    so.throw_on_failure = false;
    const SpectralReport s = second_eigenvalue(g, so);
    r.lambda2.push_back(s.lambda2);
    r.gaps.push_back(s.gap);
    r.converged.push_back(s.converged);
  };

  if (options.all_elements) {
    if (group.order() > options.budget.max_cayley_order)
      throw BudgetExceeded("group order " + r.group_order + " exceeds the Cayley budget");
    const auto order = static_cast<std::uint64_t>(group.order());
    std::vector<Permutation> set;
    for (std::uint64_t i = 0; i < order; ++i) {
      Permutation g = group.element(i);
      if (!(options.exclude_identity && g.is_identity()))
        set.push_back(std::move(g));
    }
    r.set_size = static_cast<std::uint32_t>(set.size());
    measure(set);
  } else {
    if (options.set_size == 0 || options.trials == 0)
      throw InvalidArgument("baseline needs a positive set size and trial count");
    r.set_size = options.set_size;
    for (std::uint32_t t = 0; t < options.trials; ++t) {
      std::vector<Permutation> set;
      for (std::uint32_t j = 0; j < options.set_size; ++j)
        set.push_back(group.random_element(options.seed, std::uint64_t{t} * options.set_size + j));
      measure(set);
    }
  }

  std::vector<double> sorted = r.gaps;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  r.median_gap = k % 2 ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
  r.min_gap = sorted.front();
  r.max_gap = sorted.back();
  r.mean_gap = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(k);
  return r;
}

} // namespace expander
