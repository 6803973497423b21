#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace expander {

using Point = std::uint32_t;

enum class Parity { even, odd };

// Cycle type of a permutation, fixed points included as parts of size one.
// Parts are sorted in decreasing order and sum to the degree.
struct CycleType {
  std::vector<std::uint32_t> parts;

  std::uint32_t degree() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

// A bijection of {0, ..., n-1}, stored as its image array.
//
// Composition is left-to-right: compose(p, q) applies p first, then q, so
// compose(p, q)(x) == q(p(x)). The same convention is used for words in
// random walks and for Schreier structures in the group engine.
class Permutation {
public:
  // Identity of the given degree.
  explicit Permutation(std::uint32_t degree);
  // Throws InvalidArgument unless `images` is a bijection of {0..n-1}, n >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::uint32_t degree) { return Permutation(degree); }
  // Product of the given cycles on `degree` points. Cycles must be disjoint.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  // Same permutation on a larger point set, fixing the added points.
  Permutation extend_to(std::uint32_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

// p then q. Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// inverse(g) * p * g
Permutation conjugate(const Permutation& p, const Permutation& g);
Permutation power(const Permutation& p, long long exponent);

Parity parity(const Permutation& p);
CycleType cycle_type(const Permutation& p);
std::uint32_t support(const Permutation& p);
// Length of the cycle containing x.
std::uint32_t orbit_length(const Permutation& p, Point x);
// Disjoint cycles of length >= 2, each starting at its smallest point,
// ordered by that point.
std::vector<std::vector<Point>> cycles(const Permutation& p);

// Entrywise image of an ordered tuple of distinct points.
std::vector<Point> act_on_tuple(const Permutation& p, std::span<const Point> tuple);

// Text forms.
//   cycle notation: "(0 1 2)(4 5)", identity is "()"
//   image form:     "6: 1 2 0 3 5 4"
std::string to_cycle_string(const Permutation& p);
std::string to_image_string(const Permutation& p);
Permutation parse_cycles(std::string_view text, std::uint32_t degree);
Permutation parse_images(std::string_view text);
// Accepts either form; cycle notation needs the degree.
Permutation parse_permutation(std::string_view text, std::uint32_t degree);

std::string to_string(const CycleType& type); // "3+2+1"

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace expander
