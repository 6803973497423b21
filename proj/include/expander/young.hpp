#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "expander/characters.hpp"
#include "expander/perm.hpp"

namespace expander {

constexpr std::uint32_t young_max_n = 6;

// Young's orthogonal form of the Sym(n) irreducible for lambda, n <= 6.
// Basis: standard tableaux; (i i+1) acts by the axial-distance rule.
// rho(compose(p, q)) = rho(q) rho(p), i.e. rho is a homomorphism for
// composition of functions.
class YoungRepresentation {
public:
  explicit YoungRepresentation(const Partition& lambda);

  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(tableaux_.size()); }
  // Matrix of the adjacent transposition (i i+1).
  const Eigen::MatrixXd& adjacent(std::uint32_t i) const { return adjacent_.at(i); }
  Eigen::MatrixXd operator()(const Permutation& g) const;

private:
  std::uint32_t n_;
  // tableaux_[t][v] = (row, column) of entry v
  std::vector<std::vector<std::pair<int, int>>> tableaux_;
  std::vector<Eigen::MatrixXd> adjacent_;
};

// Every permutation of Sym(n) with the given cycle type.
std::vector<Permutation> class_elements(const Partition& type);

// Spectral norm of (1/|B|) sum_{g in B} rho(g) - chi_bar(B) I.
double averaging_scalar_check(const Partition& lambda, const Partition& type);

} // namespace expander
