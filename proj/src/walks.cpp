#include "expander/walks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "expander/error.hpp"
#include "expander/rng.hpp"

namespace expander {

namespace {

std::vector<std::vector<Point>> closure_images(const std::vector<Permutation>& family)
{
  if (family.empty())
    throw InvalidArgument("random walks need a nonempty family");
  std::vector<std::vector<Point>> out;
  for (const auto& s : inverse_closure(family))
    out.emplace_back(s.images().begin(), s.images().end());
  return out;
}

// cur <- compose(cur, word) in place.
void apply_word(std::vector<Point>& cur, const std::vector<std::vector<Point>>& closure,
                std::uint64_t length, std::uint64_t seed, std::uint64_t stream, std::uint64_t offset)
{
  const Philox rng(seed, stream);
  for (std::uint64_t k = 0; k < length; ++k) {
    const auto& s = closure[rng.below(offset + k, closure.size())];
    for (auto& x : cur)
      x = s[x];
  }
}

} // namespace

Permutation random_word(const std::vector<Permutation>& family, std::uint64_t length,
                        std::uint64_t seed, std::uint64_t stream, std::uint64_t offset)
{
  const auto closure = closure_images(family);
  std::vector<Point> cur(closure[0].size());
  std::iota(cur.begin(), cur.end(), 0u);
  apply_word(cur, closure, length, seed, stream, offset);
  return Permutation(std::move(cur));
}

std::uint64_t default_word_length(std::uint32_t n)
{
  if (n < 2)
    return 0;
  return static_cast<std::uint64_t>(std::ceil(8.0 * n * std::log(static_cast<double>(n))));
}

MixingReport point_mixing_exact(const std::vector<Permutation>& family, std::uint32_t steps,
                                std::uint32_t start, double threshold, const SolverOptions& solver)
{
  GraphBudget budget;
  budget.max_vertices = mixing_point_budget;
  const ActionGraph g = build_action_graph(family, GraphKind::schreier_points, 1, budget);
  const std::uint32_t n = g.vertices();
  if (start >= n)
    throw InvalidArgument("start point out of range");
  MixingReport r;
  r.points = n;
  r.start = start;
  r.threshold = threshold;
  const SpectralReport s = second_eigenvalue(g, solver);
  r.lambda2 = s.lambda2;
  r.lambda_star = s.lambda_star;

  // For an inverse-closed multiset the distribution update p -> p P equals Delta p.
  std::vector<double> p(n, 0.0), next;
  p[start] = 1.0;
  const double u = 1.0 / n;
  for (std::uint32_t t = 0; t <= steps; ++t) {
    if (t > 0) {
      g.apply(p, next);
      p.swap(next);
    }
    double tv = 0.0;
    for (double x : p)
      tv += std::abs(x - u);
    tv *= 0.5;
    r.tv.push_back(tv);
    r.prediction.push_back(std::pow(r.lambda_star, t) * std::sqrt(static_cast<double>(n)));
    if (!r.first_below && tv < threshold)
      r.first_below = t;
    if (t > 0 && tv > r.tv[t - 1] + 1e-12)
      r.monotone = false;
    if (tv > r.prediction.back() + 1e-9)
      r.within_spectral = false;
  }
  return r;
}

CycleStatistics cycle_statistics(const std::vector<Permutation>& family, std::uint64_t length,
                                 std::uint32_t samples, std::uint64_t seed)
{
  if (samples == 0)
    throw InvalidArgument("cycle statistics need at least one sample");
  const auto closure = closure_images(family);
  const auto n = static_cast<std::uint32_t>(closure[0].size());
  std::vector<std::uint32_t> fixed(samples), cyc(samples);
  parallel_for(samples, [&](std::size_t b, std::size_t e) {
    std::vector<Point> cur(n);
    std::vector<char> seen(n);
    for (std::size_t j = b; j < e; ++j) {
      std::iota(cur.begin(), cur.end(), 0u);
      apply_word(cur, closure, length, seed, j, 0);
      std::uint32_t f = 0, c = 0;
      std::fill(seen.begin(), seen.end(), 0);
      for (Point x = 0; x < n; ++x) {
        if (cur[x] == x)
          ++f;
        if (seen[x])
          continue;
        ++c;
        for (Point y = x; !seen[y]; y = cur[y])
          seen[y] = 1;
      }
      fixed[j] = f;
      cyc[j] = c;
    }
  });
  CycleStatistics st;
  st.degree = n;
  st.length = length;
  st.samples = samples;
  st.seed = seed;
  auto moments = [&](const std::vector<std::uint32_t>& v, double& mean, double& var) {
    double s = 0.0;
    for (auto x : v)
      s += x;
    mean = s / samples;
    double q = 0.0;
    for (auto x : v)
      q += (x - mean) * (x - mean);
    var = samples > 1 ? q / (samples - 1) : 0.0;
  };
  double cvar = 0.0;
  moments(fixed, st.fixed_mean, st.fixed_variance);
  moments(cyc, st.cycles_mean, cvar);
  st.fixed_stderr = std::sqrt(st.fixed_variance / samples);
  st.cycles_stderr = std::sqrt(cvar / samples);
  for (std::uint32_t k = 1; k <= n; ++k)
    st.reference_cycles_mean += 1.0 / k;
  return st;
}

namespace {

struct Router {
  const CubeIndex& cube;
  std::vector<Point> order; // order[i] = cycle^i(0)
  std::vector<std::uint32_t> pos;

  Router(const CubeIndex& c, const LocalGroup& h) : cube(c), order(c.side()), pos(c.side())
  {
    if (h.cycle_perm.degree() != c.side())
      throw InvalidArgument("local group does not act on the cube side");
    Point x = 0;
    for (std::uint32_t i = 0; i < c.side(); ++i) {
      order[i] = x;
      pos[x] = i;
      x = h.cycle_perm(x);
    }
    if (x != 0 || orbit_length(h.cycle_perm, 0) != c.side())
      throw InvalidArgument("cycle element is not a single K-cycle");
  }

  void apply(const RouteMove& m, std::vector<Point>& tuple) const
  {
    const std::uint32_t K = cube.side();
    for (auto& x : tuple) {
      const std::uint32_t c = cube.copy_of(x, m.axis);
      const std::uint32_t local = cube.coords(x)[m.axis];
      x = cube.fiber_point(m.axis, c, order[(pos[local] + m.exponents[c]) % K]);
    }
  }

  struct Collision {
    std::size_t a, b;
    std::uint32_t axis;
  };

  // Direct plan; on failure reports the first collision.
  std::optional<std::vector<RouteMove>> direct(std::vector<Point> tuple, const std::vector<Point>& target,
                                               Collision* collision) const
  {
    const std::uint32_t K = cube.side();
    std::vector<RouteMove> moves;
    for (std::uint32_t a = cube.dim(); a-- > 0;) {
      std::map<std::uint32_t, std::pair<std::uint32_t, std::size_t>> need; // fiber -> (shift, point)
      bool any = false;
      RouteMove m{a, std::vector<std::uint32_t>(cube.copies(), 0)};
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        const std::uint32_t have = cube.coords(tuple[k])[a];
        const std::uint32_t want = cube.coords(target[k])[a];
        const std::uint32_t shift = (pos[want] + K - pos[have]) % K;
        const std::uint32_t fiber = cube.copy_of(tuple[k], a);
        auto [it, fresh] = need.try_emplace(fiber, shift, k);
        if (!fresh && it->second.first != shift) {
          if (collision)
            *collision = {it->second.second, k, a};
          return std::nullopt;
        }
        m.exponents[fiber] = shift;
        any = any || shift != 0;
      }
      if (!any)
        continue;
      apply(m, tuple);
      moves.push_back(std::move(m));
    }
    return moves;
  }
};

} // namespace

std::optional<std::vector<RouteMove>> route_tuple(const CubeIndex& cube, const LocalGroup& h,
                                                  const std::vector<Point>& source,
                                                  const std::vector<Point>& target)
{
  if (source.size() != target.size())
    throw InvalidArgument("source and target tuples differ in size");
  for (const auto* t : {&source, &target}) {
    std::vector<Point> s = *t;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && s.back() >= cube.size()))
      throw InvalidArgument("tuples must hold distinct points of the cube");
  }
  const Router router(cube, h);
  Router::Collision col{};
  if (auto plan = router.direct(source, target, &col))
    return plan;
  // Two points of one fiber of col.axis need different shifts; they differ
  // only in that coordinate, so moving one along another axis separates them.
  for (std::uint32_t b = 0; b < cube.dim(); ++b) {
    if (b == col.axis)
      continue;
    for (std::size_t which : {col.a, col.b})
      for (std::uint32_t s = 1; s < cube.side(); ++s) {
        RouteMove pre{b, std::vector<std::uint32_t>(cube.copies(), 0)};
        pre.exponents[cube.copy_of(source[which], b)] = s;
        std::vector<Point> moved = source;
        router.apply(pre, moved);
        if (auto plan = router.direct(moved, target, nullptr)) {
          plan->insert(plan->begin(), std::move(pre));
          return plan;
        }
      }
  }
  return std::nullopt;
}

TransitivityProbe transitivity_probe_pairs(
    const CubeIndex& cube, const LocalGroup& h,
    const std::vector<std::pair<std::vector<Point>, std::vector<Point>>>& pairs,
    const std::vector<std::uint32_t>& t)
{
  TransitivityProbe p;
  p.t = t;
  p.pairs = static_cast<std::uint32_t>(pairs.size());
  p.r = pairs.empty() ? 0 : static_cast<std::uint32_t>(pairs[0].first.size());
  for (const auto& [source, target] : pairs) {
    const auto plan = route_tuple(cube, h, source, target);
    if (!plan) {
      p.moves.push_back(-1);
      continue;
    }
    // Replay with the actual permutations of Gamma_bar.
    std::vector<Point> x = source;
    for (const auto& m : *plan) {
      const Permutation g = abelian_family(cube, h, m.axis, m.exponents);
      for (auto& v : x)
        v = g(v);
    }
    if (x != target)
      p.verified = false;
    p.moves.push_back(static_cast<int>(plan->size()));
  }
  for (auto budget : t) {
    std::uint32_t ok = 0;
    for (std::size_t j = 0; j < p.moves.size(); ++j)
      if (p.moves[j] >= 0 && static_cast<std::uint32_t>(p.moves[j]) <= budget)
        ++ok;
    p.kappa.push_back(pairs.empty() ? 0.0 : static_cast<double>(ok) / pairs.size());
  }
  return p;
}

TransitivityProbe transitivity_probe(const CubeIndex& cube, const LocalGroup& h, std::uint32_t r,
                                     const std::vector<std::uint32_t>& t, std::uint32_t pairs,
                                     std::uint64_t seed)
{
  if (r == 0 || r > cube.size())
    throw InvalidArgument("tuple size must lie in [1, N]");
  if (std::uint64_t{r} * (cube.dim() - 1) > cube.size())
    throw BudgetExceeded("tuple size too large for the cube");
  for (auto x : t)
    if (x < 1)
      throw InvalidArgument("move budgets must be >= 1");
  std::vector<std::pair<std::vector<Point>, std::vector<Point>>> list;
  for (std::uint32_t j = 0; j < pairs; ++j) {
    PhiloxStream rng(seed, j);
    auto draw = [&] {
      std::vector<Point> tuple;
      while (tuple.size() < r) {
        const auto x = static_cast<Point>(rng.below(cube.size()));
        if (std::find(tuple.begin(), tuple.end(), x) == tuple.end())
          tuple.push_back(x);
      }
      return tuple;
    };
    auto source = draw();
    auto target = draw();
    list.emplace_back(std::move(source), std::move(target));
  }
  TransitivityProbe p = transitivity_probe_pairs(cube, h, list, t);
  p.r = r;
  p.seed = seed;
  return p;
}

} // namespace expander
