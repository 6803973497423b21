#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "expander/characters.hpp"
#include "expander/error.hpp"
#include "expander/young.hpp"

using namespace expander;

namespace {

// Partition numbers by Euler's pentagonal recurrence.
std::uint64_t partition_count(std::uint32_t n)
{
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m)
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m)
        break;
      const int sign = k % 2 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m)
        p[m] += sign * p[m - g2];
    }
  return static_cast<std::uint64_t>(p[n]);
}

// Standard tableaux counted by removing the largest entry from a corner.
std::uint64_t syt_count(Partition lambda)
{
  while (!lambda.empty() && lambda.back() == 0)
    lambda.pop_back();
  if (lambda.empty())
    return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (i + 1 == lambda.size() || lambda[i + 1] < lambda[i]) {
      Partition mu = lambda;
      --mu[i];
      total += syt_count(mu);
    }
  return total;
}

} // namespace

TEST(Partitions, Counts)
{
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(10).size(), 42u);
  for (std::uint32_t n = 1; n <= 25; ++n) {
    const auto ps = partitions(n);
    EXPECT_EQ(ps.size(), partition_count(n));
    EXPECT_EQ(ps.front(), Partition{n});
    EXPECT_TRUE(std::is_sorted(ps.rbegin(), ps.rend()));
  }
  EXPECT_THROW(partitions(0), InvalidArgument);
  EXPECT_THROW(partitions(41), InvalidArgument);
  EXPECT_EQ(partition_string({3, 2, 1}), "3+2+1");
  EXPECT_EQ(parse_partition("3+2+1"), (Partition{3, 2, 1}));
  EXPECT_THROW(parse_partition("1+2"), InvalidArgument);
}

TEST(Characters, Dimensions)
{
  for (std::uint32_t n = 2; n <= 12; ++n) {
    EXPECT_EQ(dimension({n - 1, 1}), n - 1);
    EXPECT_EQ(dimension(Partition(n, 1)), 1);
  }
  EXPECT_EQ(dimension({2, 2}), 2);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (const auto& l : partitions(n)) {
      EXPECT_EQ(dimension(l), syt_count(l));
      sum += dimension(l) * dimension(l);
    }
    EXPECT_EQ(sum, factorial(n));
  }
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (const auto& l : partitions(n))
      EXPECT_EQ(character(l, Partition(n, 1)), dimension(l));
}

TEST(Characters, KnownValues)
{
  EXPECT_EQ(character({2, 1}, {3}), -1);
  EXPECT_EQ(character({2, 1}, {2, 1}), 0);
  EXPECT_EQ(character({1, 1, 1}, {2, 1}), -1);
  EXPECT_THROW(character({2, 1}, {2, 2}), InvalidArgument);
}

TEST(Characters, Orthogonality)
{
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const CharacterTable t = character_table(n);
    EXPECT_TRUE(rows_orthogonal(t)) << n;
    EXPECT_TRUE(columns_orthogonal(t)) << n;
  }
}

TEST(Characters, ClassSizes)
{
  for (std::uint32_t n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (const auto& c : conjugacy_classes(n))
      sum += c.size;
    EXPECT_EQ(sum, factorial(n));
  }
  for (std::uint32_t n = 1; n <= 8; ++n) {
    std::map<Partition, std::uint64_t> seen;
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), 0u);
    do
      ++seen[cycle_type(Permutation(img)).parts];
    while (std::next_permutation(img.begin(), img.end()));
    for (const auto& c : conjugacy_classes(n))
      EXPECT_EQ(c.size, seen.at(c.type));
  }
  EXPECT_EQ(class_spec({2, 2, 1, 1}).support, 4u);
}

TEST(Characters, Normalized)
{
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const CharacterTable t = character_table(n);
    for (std::size_t l = 0; l < t.irreps.size(); ++l)
      for (std::size_t k = 0; k < t.classes.size(); ++k) {
        const Rational x = normalized_character(t.irreps[l], t.classes[k].type);
        EXPECT_LE(abs(x), 1);
      }
    for (const auto& c : t.classes) {
      const auto fixed = static_cast<long>(std::count(c.type.begin(), c.type.end(), 1u));
      EXPECT_EQ(normalized_character({n - 1, 1}, c.type), Rational(fixed - 1, n - 1));
      EXPECT_EQ(normalized_character({n - 1, 1}, Partition(n, 1)), 1);
    }
  }
}

TEST(Characters, CsvExport)
{
  const std::string csv = character_table_csv(character_table(5));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "partition,5,4+1,3+2,3+1+1,2+2+1,2+1+1+1,1+1+1+1+1");
}

TEST(Young, TracesMatchMurnaghanNakayama)
{
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (const auto& l : partitions(n)) {
      const YoungRepresentation rho(l);
      EXPECT_EQ(rho.dim(), dimension(l));
      for (std::uint32_t i = 0; i + 1 < n; ++i) {
        const auto& s = rho.adjacent(i);
        EXPECT_LT((s * s - Eigen::MatrixXd::Identity(rho.dim(), rho.dim())).norm(), 1e-12);
      }
      for (const auto& c : conjugacy_classes(n)) {
        const auto elems = class_elements(c.type);
        const double tr = rho(elems.front()).trace();
        EXPECT_EQ(std::llround(tr), static_cast<long long>(character(l, c.type)));
        EXPECT_NEAR(tr, std::llround(tr), 1e-9);
      }
    }
}

TEST(Young, Homomorphism)
{
  const YoungRepresentation rho({3, 2});
  const auto p = parse_cycles("(0 3 1)", 5), q = parse_cycles("(1 4)(2 3)", 5);
  // rho(compose(p, q)) = rho(q) rho(p)
  EXPECT_LT((rho(compose(p, q)) - rho(q) * rho(p)).norm(), 1e-12);
  EXPECT_LT((rho(p) * rho(p).transpose() - Eigen::MatrixXd::Identity(5, 5)).norm(), 1e-12);
}

TEST(Young, AveragingScalar)
{
  EXPECT_EQ(averaging_scalar_check({3, 2}, {1, 1, 1, 1, 1}), 0.0);
  EXPECT_LE(averaging_scalar_check({2, 2}, {2, 2}), 1e-10);
  for (const auto& c : conjugacy_classes(5))
    EXPECT_LE(averaging_scalar_check({3, 2}, c.type), 1e-10);
  EXPECT_THROW(YoungRepresentation({4, 3}), InvalidArgument);
}

TEST(Roichman, Scan)
{
  const RoichmanReport r8 = roichman_bound_scan(8, 0.0, 0.9, std::nullopt, 4);
  ASSERT_TRUE(r8.fitted_c.has_value());
  EXPECT_GT(*r8.fitted_c, 0.0);
  EXPECT_TRUE(r8.passes);
  EXPECT_EQ(r8.lambda1_cap, 6u); // 8 - ceil(8^(1/4))
  // with a cap below n the trivial representation never enters
  const RoichmanReport tight = roichman_bound_scan(8, *r8.fitted_c * 1.5, 0.9, std::nullopt, 4);
  EXPECT_FALSE(tight.passes);
  // removing constraints cannot lower the largest admissible c
  const RoichmanReport more = roichman_bound_scan(8, 0.0, 0.9, std::nullopt, 6);
  ASSERT_TRUE(more.fitted_c.has_value());
  EXPECT_GE(*more.fitted_c, *r8.fitted_c - 1e-15);
  EXPECT_THROW(roichman_bound_scan(15, 1.0, 0.9, std::nullopt, 1), InvalidArgument);
  EXPECT_THROW(roichman_bound_scan(8, 1.0, 1.5, std::nullopt, 1), InvalidArgument);
  // [n] and [1^n] have base 1 and never constrain c
  const RoichmanReport full = roichman_bound_scan(6, 0.0, 0.9, 6u, 0);
  EXPECT_TRUE(full.passes);
  EXPECT_NE(partition_string(full.binding_lambda), "6");
  EXPECT_NE(partition_string(full.binding_lambda), "1+1+1+1+1+1");
}
