#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "expander/error.hpp"
#include "expander/perm.hpp"
#include "expander/rng.hpp"

using namespace expander;

namespace {

Permutation random_perm(std::uint32_t n, std::uint64_t stream)
{
  PhiloxStream rng(99, stream);
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation(img);
}

} // namespace

TEST(Perm, ComposeThreeCycle)
{
  const auto c = parse_cycles("(0 1 2)", 3);
  EXPECT_EQ(to_cycle_string(compose(c, c)), "(0 2 1)");
  EXPECT_TRUE(compose(c, inverse(c)).is_identity());
}

TEST(Perm, ComposeMatchesPointwiseOracle)
{
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_perm(8, 2 * s), q = random_perm(8, 2 * s + 1);
    const auto r = compose(p, q);
    for (Point x = 0; x < 8; ++x)
      EXPECT_EQ(r(x), q(p(x)));
  }
}

TEST(Perm, ComposeDegreeMismatch)
{
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), InvalidArgument);
}

TEST(Perm, Inverse)
{
  EXPECT_TRUE(inverse(Permutation(5)).is_identity());
  EXPECT_EQ(to_cycle_string(inverse(parse_cycles("(0 1 2)", 3))), "(0 2 1)");
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto p = random_perm(10, s);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  }
}

TEST(Perm, Parity)
{
  EXPECT_EQ(parity(parse_cycles("(0 1 2)", 3)), Parity::even);
  EXPECT_EQ(parity(parse_cycles("(0 1)", 3)), Parity::odd);
  EXPECT_EQ(parity(parse_cycles("(0 1 2 3 4 5 6)", 7)), Parity::even);
}

TEST(Perm, CycleTypeAndSupport)
{
  const Permutation id(5);
  EXPECT_EQ(cycle_type(id).parts, (std::vector<std::uint32_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(support(id), 0u);
  const auto p = parse_cycles("(0 1)(2 3)", 6);
  EXPECT_EQ(cycle_type(p).parts, (std::vector<std::uint32_t>{2, 2, 1, 1}));
  EXPECT_EQ(support(p), 4u);
  EXPECT_EQ(to_string(cycle_type(parse_cycles("(0 1 2)(3 4)", 6))), "3+2+1");
}

TEST(Perm, ActOnTuple)
{
  const std::vector<Point> t{3, 1};
  EXPECT_EQ(act_on_tuple(Permutation(4), t), t);
  const std::vector<Point> u{0, 1};
  EXPECT_EQ(act_on_tuple(parse_cycles("(0 1 2)", 3), u), (std::vector<Point>{1, 2}));
  const auto p = random_perm(9, 7);
  const std::vector<Point> w{4, 0, 8};
  const auto img = act_on_tuple(p, w);
  for (std::size_t i = 0; i < w.size(); ++i)
    EXPECT_EQ(img[i], p(w[i]));
  const std::vector<Point> dup{1, 1};
  EXPECT_THROW(act_on_tuple(p, dup), InvalidArgument);
  const std::vector<Point> out{1, 9};
  EXPECT_THROW(act_on_tuple(p, out), InvalidArgument);
}

TEST(Perm, Properties)
{
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto p = random_perm(12, 3 * s), q = random_perm(12, 3 * s + 1), g = random_perm(12, 3 * s + 2);
    const auto pq = compose(p, q);
    EXPECT_EQ(parity(pq) == Parity::odd, (parity(p) == Parity::odd) != (parity(q) == Parity::odd));
    EXPECT_LE(support(pq), support(p) + support(q));
    EXPECT_EQ(cycle_type(conjugate(p, g)), cycle_type(p));
    const std::vector<Point> t{2, 5, 11};
    EXPECT_EQ(act_on_tuple(pq, t), act_on_tuple(q, act_on_tuple(p, t)));
  }
}

TEST(Perm, TextRoundTrip)
{
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto p = random_perm(11, s);
    EXPECT_EQ(parse_cycles(to_cycle_string(p), 11), p);
    EXPECT_EQ(parse_images(to_image_string(p)), p);
    EXPECT_EQ(parse_permutation(to_image_string(p), 11), p);
  }
  EXPECT_EQ(to_cycle_string(Permutation(4)), "()");
  EXPECT_EQ(to_image_string(parse_cycles("(0 1 2)(4 5)", 6)), "6: 1 2 0 3 5 4");
  EXPECT_THROW(parse_cycles("(0 1)(1 2)", 3), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0}), InvalidArgument);
}

TEST(Perm, ExtendTo)
{
  const auto p = parse_cycles("(0 1)", 2).extend_to(4);
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_EQ(p(3), 3u);
}

TEST(Philox, KnownAnswer)
{
  const Philox g(0, 0);
  const auto b = g.block(0);
  EXPECT_EQ(b[0], 0x6627e8d5u);
  EXPECT_EQ(b[1], 0xe169c58du);
  EXPECT_EQ(b[2], 0xbc57ac4cu);
  EXPECT_EQ(b[3], 0x9b00dbd8u);
}
