#include "expander/young.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "expander/error.hpp"

namespace expander {

namespace {

using Cells = std::vector<std::pair<int, int>>;

// Standard tableaux by placing 0..n-1 one at a time on outer corners.
void fill(const Partition& shape, std::vector<std::uint32_t>& rows, Cells& cur,
          std::vector<Cells>& out)
{
  if (cur.size() == std::accumulate(shape.begin(), shape.end(), std::size_t{0})) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (rows[r] == shape[r] || (r > 0 && rows[r] == rows[r - 1]))
      continue;
    cur.emplace_back(static_cast<int>(r), static_cast<int>(rows[r]));
    ++rows[r];
    fill(shape, rows, cur, out);
    --rows[r];
    cur.pop_back();
  }
}

} // namespace

YoungRepresentation::YoungRepresentation(const Partition& lambda)
{
  n_ = std::accumulate(lambda.begin(), lambda.end(), 0u);
  if (n_ < 1 || n_ > young_max_n)
    throw InvalidArgument("Young's orthogonal form is provided for 1 <= n <= 6");
  dimension(lambda); // validates the shape
  std::vector<std::uint32_t> rows(lambda.size(), 0);
  Cells cur;
  fill(lambda, rows, cur, tableaux_);
  std::map<Cells, std::size_t> index;
  for (std::size_t t = 0; t < tableaux_.size(); ++t)
    index.emplace(tableaux_[t], t);
  const auto d = static_cast<Eigen::Index>(tableaux_.size());
  for (std::uint32_t i = 0; i + 1 < n_; ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t t = 0; t < tableaux_.size(); ++t) {
      const auto [ra, ca] = tableaux_[t][i];
      const auto [rb, cb] = tableaux_[t][i + 1];
      const double axial = (cb - rb) - (ca - ra);
      m(t, t) = 1.0 / axial;
      if (std::abs(axial) > 1.0) {
        Cells swapped = tableaux_[t];
        std::swap(swapped[i], swapped[i + 1]);
        m(index.at(swapped), t) = std::sqrt(1.0 - 1.0 / (axial * axial));
      }
    }
    adjacent_.push_back(std::move(m));
  }
}

Eigen::MatrixXd YoungRepresentation::operator()(const Permutation& g) const
{
  if (g.degree() != n_)
    throw InvalidArgument("permutation degree does not match the representation");
  // Bubble sort: a o s_i1 o ... o s_ik = id, so a = s_ik o ... o s_i1.
  std::vector<Point> a(g.images().begin(), g.images().end());
  std::vector<std::uint32_t> word;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::uint32_t i = 0; i + 1 < n_; ++i)
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        word.push_back(i);
        swapped = true;
      }
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim(), dim());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = m * adjacent_[*it];
  return m;
}

std::vector<Permutation> class_elements(const Partition& type)
{
  const std::uint32_t n = std::accumulate(type.begin(), type.end(), 0u);
  if (n > 10)
    throw BudgetExceeded("class enumeration is limited to n <= 10");
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> out;
  do {
    Permutation p(img);
    if (cycle_type(p).parts == type)
      out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

double averaging_scalar_check(const Partition& lambda, const Partition& type)
{
  const YoungRepresentation rho(lambda);
  const auto elements = class_elements(type);
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(rho.dim(), rho.dim());
  for (const auto& g : elements)
    avg += rho(g);
  avg /= static_cast<double>(elements.size());
  avg -= static_cast<double>(normalized_character(lambda, type)) *
         Eigen::MatrixXd::Identity(rho.dim(), rho.dim());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(avg);
  return svd.singularValues()(0);
}

} // namespace expander
