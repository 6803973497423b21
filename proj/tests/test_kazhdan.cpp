#include <gtest/gtest.h>

#include <cmath>

#include "expander/error.hpp"
#include "expander/kazhdan.hpp"

using namespace expander;

TEST(Kazhdan, CyclicGroups)
{
  const KazhdanReport z2 = kazhdan_numeric({parse_cycles("(0 1)", 2)});
  EXPECT_NEAR(z2.kazhdan, 2.0, 1e-8);
  EXPECT_NEAR(z2.per_irrep_min, 2.0, 1e-8);
  const KazhdanReport z3 = kazhdan_numeric({parse_cycles("(0 1 2)", 3)});
  EXPECT_NEAR(z3.kazhdan, std::sqrt(3.0), 1e-8);
  EXPECT_NEAR(z3.per_irrep_min, std::sqrt(3.0), 1e-8);
  ASSERT_EQ(z3.irreps.size(), 1u);
  EXPECT_EQ(z3.irreps[0].dim, 2u);
  EXPECT_EQ(z3.irreps[0].frobenius, 2u); // complex type
}

TEST(Kazhdan, Sym3)
{
  const KazhdanReport r = kazhdan_numeric({parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
  ASSERT_EQ(r.irreps.size(), 2u);
  EXPECT_EQ(r.irreps[0].dim, 1u);
  EXPECT_EQ(r.irreps[1].dim, 2u);
  EXPECT_EQ(r.irreps[1].multiplicity, 2u);

  // Grid oracle on the 2-dim irrep: reflection and a 120 degree rotation.
  double grid = 1e9;
  for (int k = 0; k < 200000; ++k) {
    const double th = M_PI * k / 200000.0;
    const double x = std::cos(th), y = std::sin(th);
    const double refl = 2.0 * std::abs(y);        // reflection in the x axis
    const double rot = std::sqrt(3.0) * std::hypot(x, y);
    grid = std::min(grid, std::max(refl, rot));
  }
  EXPECT_NEAR(r.irreps[1].pure, grid, 1e-3);
  EXPECT_NEAR(r.per_irrep_min, std::sqrt(3.0), 1e-6);
  EXPECT_EQ(r.argmin_label, r.irreps[1].label);
  // Closed form over all representations: max_p min(4p, 3(1 - p)) = 12/7.
  EXPECT_NEAR(r.kazhdan, std::sqrt(12.0 / 7.0), 1e-6);
  EXPECT_NEAR(r.weights[0], 3.0 / 7.0, 1e-4);
  EXPECT_TRUE(r.converged);
}

TEST(Kazhdan, KleinFour)
{
  const KazhdanReport r = kazhdan_numeric({parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)});
  EXPECT_EQ(r.order, 4u);
  EXPECT_EQ(r.irreps.size(), 3u);
  EXPECT_NEAR(r.kazhdan, std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(r.per_irrep_min, 2.0, 1e-6);
}

TEST(Kazhdan, Deterministic)
{
  const std::vector<Permutation> a4{parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)};
  KazhdanOptions o;
  o.seed = 11;
  const KazhdanReport a = kazhdan_numeric(a4, o), b = kazhdan_numeric(a4, o);
  EXPECT_EQ(a.kazhdan, b.kazhdan);
  EXPECT_EQ(a.per_irrep_min, b.per_irrep_min);
  EXPECT_EQ(a.argmin_label, b.argmin_label);
  // The blocks found tile the complement of the constants.
  std::uint32_t total = 0;
  for (const auto& e : a.irreps)
    total += e.dim * e.multiplicity;
  EXPECT_EQ(total, a.order - 1);
}

TEST(Kazhdan, RefusesLargeGroups)
{
  EXPECT_THROW(kazhdan_numeric({parse_cycles("(0 1)", 5), parse_cycles("(0 1 2 3 4)", 5)}), InvalidArgument);
}

TEST(Kazhdan, SimplexMaximizer)
{
  // lambda_min(p A + (1-p) B) for diagonal A = diag(4, 0), B = diag(0, 3)
  const std::vector<std::vector<double>> ls{{4, 0, 0, 0}, {0, 0, 0, 3}};
  const auto [v, p] = maximize_min_eigenvalue(ls, 2);
  EXPECT_NEAR(v, 12.0 / 7.0, 1e-9);
  EXPECT_NEAR(p[0], 3.0 / 7.0, 1e-8);
}
