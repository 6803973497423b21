#include "expander/expansion.hpp"

#include <bit>
#include <cmath>

#include "expander/error.hpp"

namespace expander {

std::uint32_t vertex_boundary(const ActionGraph& g, const std::vector<std::uint32_t>& set)
{
  std::vector<bool> in(g.vertices(), false), hit(g.vertices(), false);
  for (auto v : set) {
    if (v >= g.vertices())
      throw InvalidArgument("vertex out of range");
    in[v] = true;
  }
  std::uint32_t count = 0;
  for (auto v : set)
    for (const auto& m : g.maps()) {
      const auto w = m[v];
      if (!in[w] && !hit[w]) {
        hit[w] = true;
        ++count;
      }
    }
  return count;
}

ExpansionReport brute_force_expansion(const ActionGraph& g)
{
  const std::uint32_t n = g.vertices();
  if (n > brute_force_vertex_cap)
    throw BudgetExceeded("brute-force expansion is limited to " +
                         std::to_string(brute_force_vertex_cap) + " vertices");
  if (n < 2)
    throw InvalidArgument("expansion needs at least two vertices");
  const auto nb = g.neighbours();
  std::vector<std::uint32_t> nmask(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto w : nb[v])
      nmask[v] |= 1u << w;

  const std::uint32_t full = 1u << n;
  std::vector<std::uint32_t> reach(full, 0); // union of neighbourhoods
  ExpansionReport r;
  r.exact = true;
  r.boundary = n; // any admissible ratio is <= n
  r.size = 1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t a = 1; a < full; ++a) {
    const std::uint32_t low = a & (~a + 1);
    reach[a] = reach[a ^ low] | nmask[std::countr_zero(low)];
    const auto size = static_cast<std::uint32_t>(std::popcount(a));
    if (2 * size > n)
      continue;
    const auto boundary = static_cast<std::uint32_t>(std::popcount(reach[a] & ~a));
    if (std::uint64_t{boundary} * r.size < std::uint64_t{r.boundary} * size) {
      r.boundary = boundary;
      r.size = size;
      best_mask = a;
    }
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (best_mask >> v & 1u)
      r.witness.push_back(v);
  r.epsilon = static_cast<double>(r.boundary) / r.size;
  return r;
}

ExpansionReport cheeger_interval(const SpectralReport& report, std::uint32_t degree)
{
  ExpansionReport r;
  r.has_interval = true;
  const double gap = std::max(0.0, 1.0 - report.lambda2);
  r.lower = gap / 2.0;
  r.upper = degree * std::sqrt(2.0 * gap);
  r.epsilon = r.lower;
  return r;
}

double kazhdan_to_expansion(double kazhdan)
{
  if (!(kazhdan > 0.0) || kazhdan > 2.0)
    throw InvalidArgument("Kazhdan constant must lie in (0, 2]");
  return kazhdan * kazhdan / 4.0;
}

} // namespace expander
