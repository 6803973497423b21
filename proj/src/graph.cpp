#include "expander/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <thread>
#include <unordered_map>

#include "expander/bsgs.hpp"
#include "expander/error.hpp"

namespace expander {

namespace {
unsigned g_threads = 1;
}

void set_thread_count(unsigned n)
{
  g_threads = n == 0 ? std::max(1u, std::thread::hardware_concurrency()) : n;
}

unsigned thread_count() { return g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn)
{
  const std::size_t workers = std::min<std::size_t>(g_threads, std::max<std::size_t>(1, n / 4096));
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b < e)
      pool.emplace_back(fn, b, e);
  }
  for (auto& t : pool)
    t.join();
}

std::string to_string(GraphKind kind)
{
  switch (kind) {
  case GraphKind::cayley: return "cayley";
  case GraphKind::schreier_points: return "schreier-points";
  case GraphKind::schreier_tuples: return "schreier-tuples";
  }
  return "cayley";
}

GraphKind parse_graph_kind(const std::string& text)
{
  if (text == "cayley")
    return GraphKind::cayley;
  if (text == "schreier-points" || text == "points")
    return GraphKind::schreier_points;
  if (text == "schreier-tuples" || text == "tuples")
    return GraphKind::schreier_tuples;
  throw InvalidArgument("unknown graph kind '" + text + "'");
}

std::vector<Permutation> inverse_closure(const std::vector<Permutation>& gens)
{
  std::map<Permutation, std::uint32_t> count;
  for (const auto& g : gens)
    ++count[g];
  std::vector<Permutation> result;
  for (const auto& g : gens) {
    const auto it = count.find(g);
    if (it == count.end())
      continue; // already emitted
    const Permutation inv = inverse(g);
    if (inv == g) {
      for (std::uint32_t k = 0; k < it->second; ++k)
        result.push_back(g);
      count.erase(it);
      continue;
    }
    const std::uint32_t c = it->second;
    const auto jt = count.find(inv);
    const std::uint32_t ci = jt == count.end() ? 0 : jt->second;
    const std::uint32_t m = std::max(c, ci);
    for (std::uint32_t k = 0; k < m; ++k) {
      result.push_back(g);
      result.push_back(inv);
    }
    count.erase(g);
    count.erase(inv);
  }
  return result;
}

ActionGraph::ActionGraph(GraphKind kind, std::uint32_t vertices,
                         std::vector<std::vector<std::uint32_t>> maps, std::uint32_t tuple_size)
    : kind_(kind), n_(vertices), maps_(std::move(maps)), r_(tuple_size)
{
  if (maps_.empty())
    throw InvalidArgument("graph needs at least one generator");
  for (const auto& m : maps_) {
    if (m.size() != n_)
      throw InvalidArgument("vertex map has the wrong size");
    std::vector<bool> seen(n_, false);
    for (auto v : m) {
      if (v >= n_ || seen[v])
        throw InvalidArgument("vertex map is not a permutation");
      seen[v] = true;
    }
  }
}

void ActionGraph::apply(const std::vector<double>& x, std::vector<double>& y) const
{
  y.assign(n_, 0.0);
  const double w = 1.0 / static_cast<double>(maps_.size());
  parallel_for(n_, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      double s = 0.0;
      for (const auto& m : maps_)
        s += x[m[v]];
      y[v] = s * w;
    }
  });
}

std::vector<double> ActionGraph::apply(const std::vector<double>& x) const
{
  std::vector<double> y;
  apply(x, y);
  return y;
}

std::vector<double> ActionGraph::dense_markov() const
{
  std::vector<double> a(std::size_t{n_} * n_, 0.0);
  const double w = 1.0 / static_cast<double>(maps_.size());
  for (const auto& m : maps_)
    for (std::uint32_t v = 0; v < n_; ++v)
      a[std::size_t{v} * n_ + m[v]] += w;
  return a;
}

std::vector<std::vector<std::uint32_t>> ActionGraph::neighbours() const
{
  std::vector<std::vector<std::uint32_t>> nb(n_);
  for (std::uint32_t v = 0; v < n_; ++v) {
    for (const auto& m : maps_)
      if (m[v] != v)
        nb[v].push_back(m[v]);
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  return nb;
}

std::vector<ActionGraph::Edge> ActionGraph::edges() const
{
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> count;
  for (const auto& m : maps_)
    for (std::uint32_t v = 0; v < n_; ++v)
      if (v <= m[v])
        ++count[{v, m[v]}];
  std::vector<Edge> result;
  for (const auto& [key, c] : count)
    result.push_back({key.first, key.second, c});
  return result;
}

bool ActionGraph::is_connected() const
{
  std::vector<bool> seen(n_, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& m : maps_) {
      const auto w = m[queue[head]];
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  return queue.size() == n_;
}

namespace {

ActionGraph cayley_graph(const std::vector<Permutation>& closed, const GraphBudget& budget)
{
  const Bsgs group = Bsgs::build(closed);
  const BigInt order = group.order();
  if (order > budget.max_cayley_order)
    throw BudgetExceeded("Cayley graph of a group of order " + to_decimal(order) +
                         " exceeds the cap of " + std::to_string(budget.max_cayley_order));
  const auto n = static_cast<std::uint32_t>(order);
  std::vector<Permutation> elements;
  elements.reserve(n);
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::uint32_t i = 0; i < n; ++i) {
    elements.push_back(group.element(i));
    index.emplace(elements.back(), i);
  }
  std::vector<std::vector<std::uint32_t>> maps;
  for (const auto& s : closed) {
    std::vector<std::uint32_t> m(n);
    for (std::uint32_t i = 0; i < n; ++i)
      m[i] = index.at(compose(elements[i], s));
    maps.push_back(std::move(m));
  }
  return ActionGraph(GraphKind::cayley, n, std::move(maps));
}

ActionGraph tuple_graph(const std::vector<Permutation>& closed, std::uint32_t r,
                        const GraphBudget& budget)
{
  const std::uint32_t n = closed.front().degree();
  if (r < 1 || r > n)
    throw InvalidArgument("tuple size must lie in [1, degree]");
  std::uint64_t count = 1;
  for (std::uint32_t k = 0; k < r; ++k) {
    count *= n - k;
    if (count > budget.max_vertices)
      throw BudgetExceeded("tuple graph with r = " + std::to_string(r) + " on " + std::to_string(n) +
                           " points exceeds the vertex budget of " +
                           std::to_string(budget.max_vertices));
  }
  // Tuples in lexicographic order; key = base-n encoding.
  std::vector<std::vector<Point>> tuples;
  tuples.reserve(count);
  std::vector<Point> t(r);
  std::vector<bool> used(n, false);
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t pos) {
    if (pos == r) {
      tuples.push_back(t);
      return;
    }
    for (Point x = 0; x < n; ++x)
      if (!used[x]) {
        used[x] = true;
        t[pos] = x;
        rec(pos + 1);
        used[x] = false;
      }
  };
  rec(0);
  auto key = [n](std::span<const Point> tup) {
    std::uint64_t k = 0;
    for (Point x : tup)
      k = k * n + x;
    return k;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(tuples.size());
  for (std::uint32_t i = 0; i < tuples.size(); ++i)
    index.emplace(key(tuples[i]), i);
  std::vector<std::vector<std::uint32_t>> maps;
  for (const auto& s : closed) {
    std::vector<std::uint32_t> m(tuples.size());
    for (std::uint32_t i = 0; i < tuples.size(); ++i) {
      std::uint64_t k = 0;
      for (Point x : tuples[i])
        k = k * n + s(x);
      m[i] = index.at(k);
    }
    maps.push_back(std::move(m));
  }
  return ActionGraph(GraphKind::schreier_tuples, static_cast<std::uint32_t>(tuples.size()),
                     std::move(maps), r);
}

} // namespace

ActionGraph build_action_graph(const std::vector<Permutation>& gens, GraphKind kind,
                               std::uint32_t tuple_size, const GraphBudget& budget)
{
  if (gens.empty())
    throw InvalidArgument("graph needs at least one generator");
  for (const auto& g : gens)
    if (g.degree() != gens.front().degree())
      throw InvalidArgument("generators of different degrees");
  const auto closed = inverse_closure(gens);
  switch (kind) {
  case GraphKind::cayley:
    return cayley_graph(closed, budget);
  case GraphKind::schreier_points: {
    const std::uint32_t n = closed.front().degree();
    if (n > budget.max_vertices)
      throw BudgetExceeded("point graph exceeds the vertex budget");
    std::vector<std::vector<std::uint32_t>> maps;
    for (const auto& s : closed)
      maps.emplace_back(s.images().begin(), s.images().end());
    return ActionGraph(GraphKind::schreier_points, n, std::move(maps));
  }
  case GraphKind::schreier_tuples:
    return tuple_graph(closed, tuple_size, budget);
  }
  throw InvalidArgument("unknown graph kind");
}

std::vector<Permutation> named_graph_generators(const std::string& name)
{
  if (name == "complete4")
    return {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
            Permutation::from_cycles(4, {{0, 3}, {1, 2}})};
  if (name == "petersen")
    return {Permutation::from_cycles(10, {{0, 1, 2, 3, 4}, {5, 7, 9, 6, 8}}),
            Permutation::from_cycles(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}})};
  if (name.rfind("cycle", 0) == 0) {
    const auto n = static_cast<std::uint32_t>(std::stoul(name.substr(5)));
    if (n < 3)
      throw InvalidArgument("cycle graph needs at least 3 vertices");
    std::vector<Point> c(n);
    for (Point i = 0; i < n; ++i)
      c[i] = i;
    return {Permutation::from_cycles(n, {c})};
  }
  throw InvalidArgument("unknown named graph '" + name + "'");
}

std::string to_dot(const ActionGraph& g)
{
  std::string out = "graph G {\n";
  for (std::uint32_t v = 0; v < g.vertices(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : g.edges()) {
    for (std::uint32_t k = 0; k < e.count; ++k)
      out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_matrix_market(const ActionGraph& g)
{
  // Lower triangle of the symmetric Markov matrix, column-major order.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> count;
  for (const auto& m : g.maps())
    for (std::uint32_t v = 0; v < g.vertices(); ++v)
      if (m[v] >= v)
        ++count[{v, m[v]}];
  std::string out = "%%MatrixMarket matrix coordinate real symmetric\n";
  out += std::to_string(g.vertices()) + " " + std::to_string(g.vertices()) + " " +
         std::to_string(count.size()) + "\n";
  char buf[64];
  for (const auto& [key, c] : count) {
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(c) / g.degree());
    out += std::to_string(key.second + 1) + " " + std::to_string(key.first + 1) + " " + buf + "\n";
  }
  return out;
}

} // namespace expander
