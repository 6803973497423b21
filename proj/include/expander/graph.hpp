#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "expander/perm.hpp"

namespace expander {

// Worker cap used by operator application and sampling loops. 0 means
// hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls fn(begin, end) on a fixed partition of [0, n) into contiguous
// blocks; the partition depends only on n and the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

enum class GraphKind { cayley, schreier_points, schreier_tuples };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(const std::string& text);

struct GraphBudget {
  std::uint64_t max_vertices = 1u << 21;
  std::uint64_t max_cayley_order = 1u << 17;
};

// Inverse-closed multiset: an element x of input multiplicity c(x) appears
// max(c(x), c(x^-1)) times, so x and x^-1 always have equal weight.
std::vector<Permutation> inverse_closure(const std::vector<Permutation>& gens);

// Matrix-free graph: one vertex map per generator of the inverse-closed
// multiset. Edges v -> maps[s][v].
class ActionGraph {
public:
  ActionGraph(GraphKind kind, std::uint32_t vertices, std::vector<std::vector<std::uint32_t>> maps,
              std::uint32_t tuple_size = 1);

  GraphKind kind() const noexcept { return kind_; }
  std::uint32_t vertices() const noexcept { return n_; }
  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(maps_.size()); }
  std::uint32_t tuple_size() const noexcept { return r_; }
  const std::vector<std::vector<std::uint32_t>>& maps() const noexcept { return maps_; }

  // y = Delta x, (Delta x)(v) = mean over s of x(s(v)).
  void apply(const std::vector<double>& x, std::vector<double>& y) const;
  std::vector<double> apply(const std::vector<double>& x) const;

  // Dense Markov matrix, row-major n*n.
  std::vector<double> dense_markov() const;
  // Neighbour lists without self-loops and without repetition.
  std::vector<std::vector<std::uint32_t>> neighbours() const;
  // Multiset adjacency counts A[u][v] = #{s : s(u) = v} for u <= v, sorted.
  struct Edge {
    std::uint32_t u, v, count;
  };
  std::vector<Edge> edges() const;

  bool is_connected() const;

private:
  GraphKind kind_;
  std::uint32_t n_;
  std::vector<std::vector<std::uint32_t>> maps_;
  std::uint32_t r_;
};

// Cayley graph: vertices are the group elements (enumerated through a
// BSGS), edges g -> g s. Schreier graphs act on points or ordered r-tuples
// of distinct points. Throws BudgetExceeded above the budget.
ActionGraph build_action_graph(const std::vector<Permutation>& gens, GraphKind kind,
                               std::uint32_t tuple_size = 1, const GraphBudget& budget = {});

// Small named graphs as Schreier graphs of permutation families:
//   complete4 (Klein four group on 4 points), cycle<n> (rotation),
//   petersen (S_5-type pair sigma, tau on 10 points).
std::vector<Permutation> named_graph_generators(const std::string& name);

std::string to_dot(const ActionGraph& g);
std::string to_matrix_market(const ActionGraph& g);

} // namespace expander
