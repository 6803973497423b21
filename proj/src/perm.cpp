#include "expander/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "expander/error.hpp"

namespace expander {

std::uint32_t CycleType::degree() const
{
  return std::accumulate(parts.begin(), parts.end(), std::uint32_t{0});
}

Permutation::Permutation(std::uint32_t degree) : images_(degree)
{
  if (degree == 0)
    throw InvalidArgument("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.empty())
    throw InvalidArgument("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<Point>>& cycles)
{
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x) + " out of range for degree " +
                              std::to_string(degree));
      if (used[x])
        throw InvalidArgument("point " + std::to_string(x) + " appears twice in cycle notation");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return result;
}

bool Permutation::is_identity() const noexcept
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::extend_to(std::uint32_t degree) const
{
  if (degree < this->degree())
    throw InvalidArgument("extend_to cannot shrink a permutation");
  std::vector<Point> images(images_);
  images.resize(degree);
  std::iota(images.begin() + this->degree(), images.end(), this->degree());
  return Permutation(std::move(images), Unchecked{});
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.degree() != q.degree())
    throw InvalidArgument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()) + ")");
  std::vector<Point> images(p.degree());
  const Point* pi = p.images_.data();
  const Point* qi = q.images_.data();
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = qi[pi[x]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p)
{
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < images.size(); ++x)
    images[p.images_[x]] = x;
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& g)
{
  return compose(compose(inverse(g), p), g);
}

Permutation power(const Permutation& p, long long exponent)
{
  Permutation base = exponent < 0 ? inverse(p) : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(p.degree());
  while (e != 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::vector<std::vector<Point>> cycles(const Permutation& p)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

CycleType cycle_type(const Permutation& p)
{
  CycleType type;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::uint32_t length = 0;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++length;
    }
    type.parts.push_back(length);
  }
  std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
  return type;
}

Parity parity(const Permutation& p)
{
  const auto type = cycle_type(p);
  const std::uint32_t transpositions = p.degree() - static_cast<std::uint32_t>(type.parts.size());
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint32_t support(const Permutation& p)
{
  std::uint32_t moved = 0;
  for (Point x = 0; x < p.degree(); ++x)
    moved += p(x) != x;
  return moved;
}

std::uint32_t orbit_length(const Permutation& p, Point x)
{
  std::uint32_t length = 1;
  for (Point y = p(x); y != x; y = p(y))
    ++length;
  return length;
}

std::vector<Point> act_on_tuple(const Permutation& p, std::span<const Point> tuple)
{
  std::vector<bool> seen(p.degree(), false);
  std::vector<Point> result;
  result.reserve(tuple.size());
  for (Point x : tuple) {
    if (x >= p.degree())
      throw InvalidArgument("tuple entry " + std::to_string(x) + " out of range");
    if (seen[x])
      throw InvalidArgument("tuple entry " + std::to_string(x) + " repeated");
    seen[x] = true;
    result.push_back(p(x));
  }
  return result;
}

std::string to_cycle_string(const Permutation& p)
{
  const auto cs = cycles(p);
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i != 0)
        out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_image_string(const Permutation& p)
{
  std::string out = std::to_string(p.degree()) + ":";
  for (Point x : p.images())
    out += ' ' + std::to_string(x);
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

Point read_number(std::string_view text, std::size_t& pos)
{
  Point value = 0;
  const auto* first = text.data() + pos;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first)
    throw InvalidArgument("expected a point index at offset " + std::to_string(pos) + " in '" +
                          std::string(text) + "'");
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

void skip_spaces(std::string_view text, std::size_t& pos)
{
  while (pos < text.size() && is_space(text[pos]))
    ++pos;
}

} // namespace

Permutation parse_cycles(std::string_view text, std::uint32_t degree)
{
  std::vector<std::vector<Point>> cs;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size())
    throw InvalidArgument("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidArgument("expected '(' in cycle notation '" + std::string(text) + "'");
    ++pos;
    std::vector<Point> cycle;
    skip_spaces(text, pos);
    while (pos < text.size() && text[pos] != ')') {
      cycle.push_back(read_number(text, pos));
      skip_spaces(text, pos);
    }
    if (pos == text.size())
      throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
    ++pos;
    if (!cycle.empty())
      cs.push_back(std::move(cycle));
    skip_spaces(text, pos);
  }
  return Permutation::from_cycles(degree, cs);
}

Permutation parse_images(std::string_view text)
{
  std::size_t pos = 0;
  skip_spaces(text, pos);
  const Point degree = read_number(text, pos);
  skip_spaces(text, pos);
  if (pos == text.size() || text[pos] != ':')
    throw InvalidArgument("expected ':' after degree in '" + std::string(text) + "'");
  ++pos;
  std::vector<Point> images;
  skip_spaces(text, pos);
  while (pos < text.size()) {
    images.push_back(read_number(text, pos));
    skip_spaces(text, pos);
  }
  if (images.size() != degree)
    throw InvalidArgument("image form lists " + std::to_string(images.size()) +
                          " images for degree " + std::to_string(degree));
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text, std::uint32_t degree)
{
  if (text.find(':') != std::string_view::npos) {
    Permutation p = parse_images(text);
    if (p.degree() != degree)
      throw InvalidArgument("permutation degree " + std::to_string(p.degree()) +
                            " does not match expected " + std::to_string(degree));
    return p;
  }
  return parse_cycles(text, degree);
}

std::string to_string(const CycleType& type)
{
  std::string out;
  for (std::size_t i = 0; i < type.parts.size(); ++i) {
    if (i != 0)
      out += '+';
    out += std::to_string(type.parts[i]);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace expander
