#include <gtest/gtest.h>

#include <map>
#include <set>

#include "expander/bsgs.hpp"
#include "expander/error.hpp"
#include "expander/matrix.hpp"

using namespace expander;

namespace {

// Closure by breadth-first multiplication; independent of the BSGS code.
std::set<Permutation> closure(const std::vector<Permutation>& gens)
{
  std::set<Permutation> seen{Permutation(gens[0].degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        auto h = compose(g, s);
        if (seen.insert(h).second)
          next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<Permutation> sl3f2_perms()
{
  const auto f = GaloisField::make(2, 1);
  const PointEnumeration pts(f, 3, EnumerationKind::nonzero_vectors);
  std::vector<Permutation> out;
  for (const auto& m : base_generating_set(f, 3, GeneratorStyle::elementary))
    out.push_back(perm_from_matrix(m, pts));
  return out;
}

} // namespace

TEST(Bsgs, SmallOrders)
{
  EXPECT_EQ(Bsgs::build({parse_cycles("(0 1 2)", 3)}).order(), 3);
  const auto sl = sl3f2_perms();
  EXPECT_EQ(closure(sl).size(), 168u);
  EXPECT_EQ(Bsgs::build(sl).order(), 168);
  const std::vector<Permutation> s6{parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)};
  EXPECT_EQ(closure(s6).size(), 720u);
  EXPECT_EQ(Bsgs::build(s6).order(), factorial(6));
}

TEST(Bsgs, Membership)
{
  const std::vector<Permutation> a5{parse_cycles("(0 1 2)", 5), parse_cycles("(0 1 2 3 4)", 5)};
  const Bsgs b = Bsgs::build(a5);
  EXPECT_TRUE(b.contains(Permutation(5)));
  EXPECT_FALSE(b.contains(parse_cycles("(0 1)", 5)));
  Permutation w(5);
  for (int i = 0; i < 17; ++i)
    w = compose(w, a5[i % 2 ? 0 : 1]);
  EXPECT_TRUE(b.contains(w));
  EXPECT_THROW(b.contains(Permutation(4)), InvalidArgument);
  EXPECT_TRUE(is_alternating(b, 5));
  EXPECT_FALSE(is_symmetric(b, 5));
}

TEST(Bsgs, AlternatingSymmetric)
{
  EXPECT_TRUE(is_alternating(Bsgs::build({parse_cycles("(0 1 2)", 3)}), 3));
  const Bsgs t = Bsgs::build({parse_cycles("(0 1)", 3)});
  EXPECT_FALSE(is_alternating(t, 3));
  EXPECT_FALSE(is_symmetric(t, 3));
}

TEST(Bsgs, Invariants)
{
  const std::vector<std::vector<Permutation>> sets{
      sl3f2_perms(),
      {parse_cycles("(0 1 2)", 7), parse_cycles("(2 3 4 5 6)", 7)},
      {parse_cycles("(0 1)(2 3)", 8), parse_cycles("(0 2 4 6)(1 3 5 7)", 8)},
  };
  for (const auto& gens : sets) {
    const Bsgs b = Bsgs::build(gens);
    for (const auto& g : gens)
      EXPECT_TRUE(b.contains(g));
    for (const auto& s : b.strong_generators())
      EXPECT_TRUE(b.strip(s).first.is_identity());
    BigInt product = 1;
    for (std::size_t l = 0; l < b.levels(); ++l)
      product *= b.orbit(l).size();
    EXPECT_EQ(product, b.order());
    EXPECT_EQ(factorial(gens[0].degree()) % b.order(), 0);
    for (std::uint64_t seed : {1ull, 7ull, 12345ull}) {
      BsgsOptions o;
      o.seed = seed;
      EXPECT_EQ(Bsgs::build(gens, o).order(), b.order());
    }
  }
}

TEST(Bsgs, ElementIsBijection)
{
  const Bsgs b = Bsgs::build({parse_cycles("(0 1 2)", 4), parse_cycles("(1 2 3)", 4)});
  std::set<Permutation> seen;
  for (int i = 0; i < 12; ++i)
    seen.insert(b.element(i));
  EXPECT_EQ(seen.size(), 12u);
}

TEST(Bsgs, RandomElementUniform)
{
  const Bsgs c3 = Bsgs::build({parse_cycles("(0 1 2)", 3)});
  std::map<Permutation, int> counts;
  const int draws = 30000;
  for (int i = 0; i < draws; ++i)
    ++counts[c3.random_element(5, i)];
  ASSERT_EQ(counts.size(), 3u);
  double chi2 = 0.0;
  for (auto& [p, c] : counts)
    chi2 += (c - draws / 3.0) * (c - draws / 3.0) / (draws / 3.0);
  EXPECT_LT(chi2, 13.8); // p = 0.001 at 2 degrees of freedom

  const Bsgs trivial = Bsgs::build({Permutation(4)});
  EXPECT_TRUE(trivial.random_element(1, 2).is_identity());

  const Bsgs a4 = Bsgs::build({parse_cycles("(0 1 2)", 4), parse_cycles("(1 2 3)", 4)});
  std::set<Permutation> seen;
  for (int i = 0; i < 1000; ++i)
    seen.insert(a4.random_element(3, i));
  EXPECT_EQ(seen.size(), 12u);
}

TEST(Bsgs, JsonishRoundTrip)
{
  const Bsgs b = Bsgs::build(sl3f2_perms());
  const Bsgs r = Bsgs::from_base_and_generators(b.degree(), b.base(), b.strong_generators());
  EXPECT_EQ(r.order(), 168);
  std::vector<Point> wrong_base{b.base()[0]};
  EXPECT_THROW(Bsgs::from_base_and_generators(b.degree(), wrong_base, b.strong_generators()),
               CertificationFailure);
}

TEST(Bsgs, Alt49Order)
{
  std::vector<Point> cyc;
  for (Point i = 0; i < 49; ++i)
    cyc.push_back(i);
  const Bsgs b = Bsgs::build({parse_cycles("(0 1 2)", 49), Permutation::from_cycles(49, {cyc})});
  EXPECT_EQ(b.order(), factorial(49) / 2);
  EXPECT_TRUE(is_alternating(b, 49));
}
