#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expander/bigint.hpp"
#include "expander/perm.hpp"

namespace expander {

struct BsgsOptions {
  // Seed of the product-replacement stage. Results (base, generators) are a
  // function of the seed; the group order never is.
  std::uint64_t seed = 0;
  // A proven upper bound on |<gens>|. When the partial chain reaches it the
  // construction stops early: the product of basic orbit sizes of any partial
  // chain is a lower bound on the group order, so equality is exact.
  std::optional<BigInt> order_bound;
  // Number of consecutive sifts with trivial residue that ends the random
  // stage; the deterministic Schreier-Sims completion runs afterwards.
  std::uint32_t quiet_sifts = 24;
  std::uint32_t replacement_slots = 10;
  std::uint32_t replacement_warmup = 60;
};

// Base and strong generating set with explicit transversals.
//
// Level i holds base point b_i, the basic orbit of b_i under the strong
// generators fixing b_0..b_{i-1}, and for every orbit point beta the
// inverse of a coset representative u_beta with b_i^{u_beta} = beta.
class Bsgs {
public:
  // Builds a complete BSGS of <gens>. Generators must share one degree.
  static Bsgs build(const std::vector<Permutation>& gens, const BsgsOptions& options = {});
  // Rebuilds the transversals of a stored (base, strong generators) pair and
  // checks that every strong generator sifts. Throws CertificationFailure if
  // the pair is not a BSGS.
  static Bsgs from_base_and_generators(std::uint32_t degree, std::vector<Point> base,
                                       std::vector<Permutation> strong_generators);

  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Point>& base() const noexcept { return base_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  const std::vector<Permutation>& generators() const noexcept { return input_gens_; }
  std::size_t levels() const noexcept { return base_.size(); }
  // Points of the basic orbit at `level`, in discovery order.
  const std::vector<Point>& orbit(std::size_t level) const { return levels_.at(level).orbit; }
  // Coset representative u_beta at `level`.
  Permutation transversal(std::size_t level, Point beta) const;

  BigInt order() const;

  // Sifting membership test. Throws InvalidArgument on degree mismatch.
  bool contains(const Permutation& p) const;
  // Residue of sifting and the level at which sifting stopped
  // (levels() if it went through every level).
  std::pair<Permutation, std::size_t> strip(const Permutation& p, std::size_t from_level = 0) const;

  // Exactly uniform element: one representative per level.
  Permutation random_element(std::uint64_t seed, std::uint64_t stream = 0) const;
  // Element with mixed-radix index `index` < order(); a bijection onto the group.
  Permutation element(const BigInt& index) const;

  bool is_transitive() const;

private:
  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;
    // inverse_reps[beta] set for orbit points
    std::vector<std::optional<Permutation>> inverse_reps;
  };

  explicit Bsgs(std::uint32_t degree) : degree_(degree) {}

  std::vector<std::size_t> generators_for_level(std::size_t level) const;
  void rebuild_orbit(std::size_t level);
  void extend_orbit(std::size_t level, const Permutation& new_gen);
  // Adds a strong generator with the given residue level, extending the base
  // when the residue fixes every base point. Returns the deepest level whose
  // orbit changed.
  std::size_t add_strong_generator(Permutation g, std::size_t residue_level);
  void random_stage(const BsgsOptions& options);
  void deterministic_completion();
  bool order_reached(const BigInt& bound) const;

  std::uint32_t degree_;
  std::vector<Permutation> input_gens_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

// Exact tests by order comparison.
bool is_alternating(const Bsgs& group, std::uint32_t n);
bool is_symmetric(const Bsgs& group, std::uint32_t n);

// Orbit of a point under a generating set (BFS).
std::vector<Point> orbit_of(const std::vector<Permutation>& gens, Point x);
bool is_transitive(const std::vector<Permutation>& gens);

// Upper bound used by certification: |Sym(n)|, halved when every generator is
// even.
BigInt parity_order_bound(const std::vector<Permutation>& gens);

} // namespace expander
