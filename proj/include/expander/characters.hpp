#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expander/bigint.hpp"

namespace expander {

// Weakly decreasing positive parts.
using Partition = std::vector<std::uint32_t>;

constexpr std::uint32_t max_partition_n = 40;

// All partitions of n in lexicographically descending order ([n] first).
std::vector<Partition> partitions(std::uint32_t n);
std::string partition_string(const Partition& p); // "3+2+1"
Partition parse_partition(const std::string& text);
Partition conjugate_partition(const Partition& p);

// Number of standard Young tableaux, by the hook length formula.
BigInt dimension(const Partition& lambda);

// Conjugacy class of Sym(n) given by its cycle type.
struct ClassSpec {
  Partition type;
  BigInt size;           // n! / prod_i (i^{m_i} m_i!)
  std::uint32_t support; // n minus the number of fixed points
};

ClassSpec class_spec(const Partition& type);
// Classes in the order of partitions(n).
std::vector<ClassSpec> conjugacy_classes(std::uint32_t n);

// Murnaghan-Nakayama. Requires |lambda| = |type|.
BigInt character(const Partition& lambda, const Partition& type);
Rational normalized_character(const Partition& lambda, const Partition& type);

struct CharacterTable {
  std::uint32_t n = 0;
  std::vector<Partition> irreps;  // rows
  std::vector<ClassSpec> classes; // columns
  std::vector<std::vector<BigInt>> values;
};

CharacterTable character_table(std::uint32_t n);
// Header "partition,<cycle types>", one row per partition, exact integers.
std::string character_table_csv(const CharacterTable& table);

// Exact orthogonality relations; true when every entry matches.
bool rows_orthogonal(const CharacterTable& table);
bool columns_orthogonal(const CharacterTable& table);

struct RoichmanViolation {
  Partition lambda;
  Partition type;
  double abs_normalized = 0.0;
  double bound = 0.0;
};

struct RoichmanReport {
  std::uint32_t n = 0;
  double c = 0.0;
  double q = 0.0;
  std::uint32_t lambda1_cap = 0;
  std::uint32_t support_floor = 0;
  std::uint32_t pairs_checked = 0;
  std::uint32_t pairs_constraining = 0; // pairs with chi != 0
  std::vector<RoichmanViolation> violations;
  bool passes = false;
  // Largest c with |chi_bar| <= max(l/n, q)^(c supp) on every scanned pair,
  // l = max(lambda_1, lambda'_1). Absent when no pair constrains c.
  std::optional<double> fitted_c;
  Partition binding_lambda;
  Partition binding_type;
};

// Default cap n - ceil(n^(1/4)). The scan itself uses `c`; pass c <= 0 to
// scan with the fitted value.
std::uint32_t default_lambda1_cap(std::uint32_t n);
RoichmanReport roichman_bound_scan(std::uint32_t n, double c, double q,
                                   std::optional<std::uint32_t> lambda1_cap,
                                   std::uint32_t support_floor);

} // namespace expander
