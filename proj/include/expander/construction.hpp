#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expander/bigint.hpp"
#include "expander/matrix.hpp"
#include "expander/perm.hpp"

namespace expander {

// Points of the cube {0..K-1}^d, indexed lexicographically with the first
// coordinate least significant: index(x) = sum_j x_j K^j.
class CubeIndex {
public:
  CubeIndex(std::uint32_t K, std::uint32_t d);

  std::uint32_t side() const noexcept { return K_; }
  std::uint32_t dim() const noexcept { return d_; }
  std::uint32_t size() const noexcept { return size_; }
  // Number of fibers along one axis, K^(d-1).
  std::uint32_t copies() const noexcept { return size_ / K_; }

  std::uint32_t index(const std::vector<std::uint32_t>& coords) const;
  std::vector<std::uint32_t> coords(std::uint32_t index) const;

  // Fiber index of a point for `axis`: its other coordinates read as a
  // base-K number, least significant first.
  std::uint32_t copy_of(std::uint32_t index, std::uint32_t axis) const;
  // The other coordinates of fiber `copy`, in axis order.
  std::vector<std::uint32_t> copy_coords(std::uint32_t copy) const;
  // Point of fiber `copy` of `axis` whose axis coordinate is `local`.
  std::uint32_t fiber_point(std::uint32_t axis, std::uint32_t copy, std::uint32_t local) const;

private:
  std::uint32_t K_;
  std::uint32_t d_;
  std::uint32_t size_;
  std::vector<std::uint32_t> stride_;
};

constexpr std::uint64_t default_point_budget = 1u << 20;

// Throws BudgetExceeded when K^d exceeds `budget`.
CubeIndex cube_enumeration(std::uint32_t K, std::uint32_t d,
                           std::uint64_t budget = default_point_budget);

// Permutation of the cube acting as `local` on fiber `copy` of `axis` and
// trivially elsewhere.
Permutation embed_axis(const Permutation& local, const std::vector<std::uint32_t>& copy,
                       std::uint32_t axis, const CubeIndex& cube);
Permutation embed_axis(const Permutation& local, std::uint32_t copy, std::uint32_t axis,
                       const CubeIndex& cube);

// H = SL_m(F_p) acting on K points, with the K-cycle coming from GF(p^m).
struct LocalGroupSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 3;
  std::vector<std::uint32_t> modulus; // empty: table / smallest primitive
  EnumerationKind kind = EnumerationKind::nonzero_vectors;
  GeneratorStyle style = GeneratorStyle::elementary;
};

struct LocalGroup {
  LocalGroupSpec spec;
  FieldPtr base_field;      // GF(p)
  FieldPtr extension_field; // GF(p^m)
  PointEnumeration points;
  std::vector<Matrix> generators;
  std::vector<Permutation> generator_perms;
  Matrix cycle_matrix;
  Permutation cycle_perm;
  BigInt order; // |SL_m(F_p)| acting (faithfully or through its center) on the points

  std::uint32_t degree() const { return points.size(); }
};

LocalGroup make_local_group(const LocalGroupSpec& spec);

// One element of S~: an M-tuple of permutations of the K local points.
struct PowerElement {
  std::vector<Permutation> components;
  std::string source;                 // "diag:<j>" or "sep:<j>"
  std::optional<std::uint32_t> copy;  // set for separators
};

struct PowerGenSet {
  std::uint32_t copies = 0;
  std::vector<PowerElement> elements;
  // twists[c][j]: index of the automorphism applied to generator j on copy c
  std::vector<std::vector<std::uint32_t>> twists;
  bool hall_certified = false;
  std::optional<BigInt> bsgs_order; // set when the product action was certified
};

struct PowerOptions {
  std::uint64_t seed = 0;
  // BSGS of the product action is run when copies <= this cap.
  std::uint32_t bsgs_copy_cap = 20;
  // Pairwise Hall check is run when copies <= this cap (it is quadratic).
  std::uint32_t hall_copy_cap = 64;
  std::uint32_t max_attempts = 256;
};

// Twisted-diagonal generating set of H^M. Throws CertificationFailure if a
// check fails.
PowerGenSet power_generating_set(const LocalGroup& h, std::uint32_t copies,
                                 const PowerOptions& options = {});

// BSGS order of <tuples> acting on copies * K points (block c carries
// component c). `order_bound`, when given, must be a proven upper bound
// such as |H|^M.
BigInt power_group_order(const PowerGenSet& set, const std::optional<BigInt>& order_bound = {});

// True if no automorphism of H maps the tuple `a` onto `b` entrywise,
// assuming both generate the quasisimple group H of order `h_order`.
bool tuples_inequivalent(const std::vector<Permutation>& a, const std::vector<Permutation>& b,
                         const BigInt& h_order);

enum class FamilyKind { F_N, F_n, F_tilde_n, C, Gamma_bar, custom };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

struct ElementLabel {
  std::optional<std::uint32_t> axis;
  std::string source;
  std::optional<std::uint64_t> copy;
  std::optional<std::uint32_t> window;
};

struct FamilyParams {
  std::uint32_t K = 0;
  std::uint32_t d = 0;
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> modulus;
  std::string enumeration;
  std::string style;
  std::uint64_t seed = 0;
  std::uint32_t base_degree = 0; // padding: n_s
  std::vector<std::uint32_t> windows;
};

struct GeneratingFamily {
  FamilyKind kind = FamilyKind::custom;
  std::uint32_t degree = 0;
  FamilyParams params;
  std::vector<Permutation> elements;
  std::vector<ElementLabel> labels;
};

// F_N = union over axes of pi_i(S~).
GeneratingFamily build_F_N(const CubeIndex& cube, const LocalGroup& h, const PowerGenSet& s);

// Convenience: local group, S~ and F_N for (K from spec, d).
struct Construction {
  LocalGroup local;
  CubeIndex cube;
  PowerGenSet power;
  GeneratingFamily family;
};
Construction construct_family(const LocalGroupSpec& spec, std::uint32_t d,
                              const PowerOptions& options = {},
                              std::uint64_t point_budget = default_point_budget);

// pi_axis of the per-copy powers cycle^exponents[c].
Permutation abelian_family(const CubeIndex& cube, const LocalGroup& h, std::uint32_t axis,
                           const std::vector<std::uint32_t>& exponents);

// `count` elements of C: uniform axis, uniform exponent map, from stream j
// of `seed` for sample j.
GeneratingFamily enumerate_C_sample(const CubeIndex& cube, const LocalGroup& h,
                                    std::uint32_t count, std::uint64_t seed);

// Window starts used by pad_to_all_n: step n_s - overlap, last window
// right-aligned. overlap 0 selects the default max(5, ceil(n_s / 2)).
std::vector<std::uint32_t> padding_windows(std::uint32_t n, std::uint32_t n_s,
                                           std::uint32_t overlap = 0);

GeneratingFamily pad_to_all_n(std::uint32_t n, const GeneratingFamily& base,
                              std::uint32_t overlap = 0);

enum class OddElement { transposition, involution };

// F~_n = F_n plus one odd involution. Throws InvalidArgument unless
// <F_n> = Alt(n) (checked by BSGS).
GeneratingFamily sym_variant(const GeneratingFamily& f, OddElement odd = OddElement::transposition);

// Generates the family's group and compares with n!/2 or n!.
struct FamilyCertificate {
  bool transitive = false;
  bool all_even = false;
  BigInt order;
  BigInt expected;
  bool ok = false;
  std::vector<Point> base;
  std::vector<Permutation> strong_generators;
};
FamilyCertificate certify_family(const GeneratingFamily& f, std::uint64_t seed = 0);

} // namespace expander
