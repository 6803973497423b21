#include "expander/bsgs.hpp"

#include <algorithm>
#include <deque>

#include "expander/error.hpp"
#include "expander/rng.hpp"

namespace expander {

namespace {

std::size_t first_moved_level(const Permutation& g, const std::vector<Point>& base)
{
  for (std::size_t i = 0; i < base.size(); ++i)
    if (g(base[i]) != base[i])
      return i;
  return base.size();
}

Point first_moved_point(const Permutation& g)
{
  for (Point x = 0; x < g.degree(); ++x)
    if (g(x) != x)
      return x;
  return g.degree();
}

} // namespace

Bsgs Bsgs::build(const std::vector<Permutation>& gens, const BsgsOptions& options)
{
  if (gens.empty())
    throw InvalidArgument("build_bsgs needs at least one generator");
  const std::uint32_t degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("build_bsgs: generators of different degrees");

  Bsgs b(degree);
  b.input_gens_ = gens;
  for (const auto& g : gens) {
    auto [residue, level] = b.strip(g);
    if (!residue.is_identity())
      b.add_strong_generator(std::move(residue), level);
  }
  if (b.strong_.empty())
    return b;

  if (options.order_bound && b.order_reached(*options.order_bound))
    return b;
  b.random_stage(options);
  if (options.order_bound && b.order_reached(*options.order_bound))
    return b;
  b.deterministic_completion();
  if (options.order_bound && b.order() > *options.order_bound)
    throw InvalidArgument("group order exceeds the supplied upper bound");
  return b;
}

Bsgs Bsgs::from_base_and_generators(std::uint32_t degree, std::vector<Point> base,
                                    std::vector<Permutation> strong_generators)
{
  Bsgs b(degree);
  for (const auto& g : strong_generators)
    if (g.degree() != degree)
      throw InvalidArgument("stored strong generator has the wrong degree");
  for (Point x : base)
    if (x >= degree)
      throw InvalidArgument("stored base point out of range");
  b.base_ = std::move(base);
  b.strong_ = std::move(strong_generators);
  b.input_gens_ = b.strong_;
  b.levels_.resize(b.base_.size());
  for (std::size_t i = 0; i < b.base_.size(); ++i) {
    b.levels_[i].base_point = b.base_[i];
    b.rebuild_orbit(i);
  }
  for (const auto& g : b.strong_)
    if (first_moved_level(g, b.base_) == b.base_.size() && !g.is_identity())
      throw CertificationFailure("stored strong generator fixes every base point");
  const BigInt before = b.order();
  const std::size_t gens_before = b.strong_.size();
  b.deterministic_completion();
  if (b.strong_.size() != gens_before || b.order() != before)
    throw CertificationFailure("stored base and generators do not form a BSGS");
  return b;
}

Permutation Bsgs::transversal(std::size_t level, Point beta) const
{
  const auto& rep = levels_.at(level).inverse_reps.at(beta);
  if (!rep)
    throw InvalidArgument("point is not in the basic orbit");
  return inverse(*rep);
}

BigInt Bsgs::order() const
{
  BigInt result = 1;
  for (const auto& level : levels_)
    result *= level.orbit.size();
  return result;
}

bool Bsgs::order_reached(const BigInt& bound) const { return order() >= bound; }

bool Bsgs::contains(const Permutation& p) const
{
  if (p.degree() != degree_)
    throw InvalidArgument("contains: degree mismatch");
  return strip(p).first.is_identity();
}

std::pair<Permutation, std::size_t> Bsgs::strip(const Permutation& p, std::size_t from_level) const
{
  Permutation g = p;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Point beta = g(levels_[i].base_point);
    const auto& rep = levels_[i].inverse_reps[beta];
    if (!rep)
      return {std::move(g), i};
    g = compose(g, *rep);
  }
  return {std::move(g), levels_.size()};
}

std::vector<std::size_t> Bsgs::generators_for_level(std::size_t level) const
{
  std::vector<std::size_t> result;
  for (std::size_t k = 0; k < strong_.size(); ++k)
    if (first_moved_level(strong_[k], base_) >= level)
      result.push_back(k);
  return result;
}

void Bsgs::rebuild_orbit(std::size_t level)
{
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.inverse_reps.assign(degree_, std::nullopt);
  lv.orbit.push_back(lv.base_point);
  lv.inverse_reps[lv.base_point] = Permutation(degree_);
  const auto gens = generators_for_level(level);
  std::vector<Permutation> gen_inverses;
  for (auto k : gens)
    gen_inverses.push_back(inverse(strong_[k]));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const Point beta = lv.orbit[head];
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const Point image = strong_[gens[t]](beta);
      if (!lv.inverse_reps[image]) {
        lv.inverse_reps[image] = compose(gen_inverses[t], *lv.inverse_reps[beta]);
        lv.orbit.push_back(image);
      }
    }
  }
}

void Bsgs::extend_orbit(std::size_t level, const Permutation& new_gen)
{
  Level& lv = levels_[level];
  const auto gens = generators_for_level(level);
  std::vector<Permutation> gen_inverses;
  for (auto k : gens)
    gen_inverses.push_back(inverse(strong_[k]));
  const Permutation new_inverse = inverse(new_gen);

  // Images of old points under the new generator seed the frontier.
  const std::size_t old_size = lv.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) {
    const Point beta = lv.orbit[idx];
    const Point image = new_gen(beta);
    if (!lv.inverse_reps[image]) {
      lv.inverse_reps[image] = compose(new_inverse, *lv.inverse_reps[beta]);
      lv.orbit.push_back(image);
    }
  }
  for (std::size_t head = old_size; head < lv.orbit.size(); ++head) {
    const Point beta = lv.orbit[head];
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const Point image = strong_[gens[t]](beta);
      if (!lv.inverse_reps[image]) {
        lv.inverse_reps[image] = compose(gen_inverses[t], *lv.inverse_reps[beta]);
        lv.orbit.push_back(image);
      }
    }
  }
}

std::size_t Bsgs::add_strong_generator(Permutation g, std::size_t residue_level)
{
  if (residue_level == levels_.size()) {
    const Point b = first_moved_point(g);
    base_.push_back(b);
    Level lv;
    lv.base_point = b;
    levels_.push_back(std::move(lv));
  }
  strong_.push_back(std::move(g));
  const std::size_t top = residue_level;
  // The newest level may pick up older generators that fix the whole old
  // base, so rebuild it from scratch; shallower levels only extend.
  if (top == levels_.size() - 1)
    rebuild_orbit(top);
  else
    extend_orbit(top, strong_.back());
  for (std::size_t l = 0; l < top; ++l)
    extend_orbit(l, strong_.back());
  return top;
}

void Bsgs::random_stage(const BsgsOptions& options)
{
  PhiloxStream rng(options.seed, 0x5c4e1e5u);
  const std::size_t slots = std::max<std::size_t>(options.replacement_slots, 2);
  std::vector<Permutation> state;
  state.reserve(slots);
  for (std::size_t k = 0; k < slots; ++k)
    state.push_back(input_gens_[k % input_gens_.size()]);
  Permutation accumulator(degree_);

  auto step = [&]() {
    const std::size_t i = rng.below(slots);
    std::size_t j = rng.below(slots - 1);
    if (j >= i)
      ++j;
    Permutation other = rng.below(2) ? inverse(state[j]) : state[j];
    state[i] = rng.below(2) ? compose(state[i], other) : compose(other, state[i]);
    accumulator = compose(accumulator, state[i]);
    return accumulator;
  };

  for (std::uint32_t k = 0; k < options.replacement_warmup; ++k)
    step();

  std::uint32_t quiet = 0;
  while (quiet < options.quiet_sifts) {
    if (options.order_bound && order_reached(*options.order_bound))
      return;
    auto [residue, level] = strip(step());
    if (residue.is_identity()) {
      ++quiet;
      continue;
    }
    add_strong_generator(std::move(residue), level);
    quiet = 0;
  }
}

void Bsgs::deterministic_completion()
{
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool added = false;
    const auto gens = generators_for_level(i);
    for (std::size_t idx = 0; idx < levels_[i].orbit.size() && !added; ++idx) {
      const Point beta = levels_[i].orbit[idx];
      const Permutation u = inverse(*levels_[i].inverse_reps[beta]);
      for (std::size_t k : gens) {
        const Permutation& s = strong_[k];
        const Point image = s(beta);
        Permutation h = compose(compose(u, s), *levels_[i].inverse_reps[image]);
        if (h.is_identity())
          continue;
        auto [residue, level] = strip(h, i + 1);
        if (residue.is_identity())
          continue;
        const std::size_t top = add_strong_generator(std::move(residue), level);
        i = top + 1;
        added = true;
        break;
      }
    }
  }
}

Permutation Bsgs::random_element(std::uint64_t seed, std::uint64_t stream) const
{
  PhiloxStream rng(seed, stream);
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& orbit = levels_[l].orbit;
    const Point beta = orbit[rng.below(orbit.size())];
    g = compose(g, inverse(*levels_[l].inverse_reps[beta]));
  }
  return g;
}

Permutation Bsgs::element(const BigInt& index) const
{
  if (index < 0 || index >= order())
    throw InvalidArgument("element index out of range");
  BigInt rest = index;
  std::vector<Point> choice(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const std::size_t size = levels_[l].orbit.size();
    choice[l] = levels_[l].orbit[static_cast<std::size_t>(rest % size)];
    rest /= size;
  }
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;)
    g = compose(g, inverse(*levels_[l].inverse_reps[choice[l]]));
  return g;
}

bool Bsgs::is_transitive() const
{
  if (levels_.empty())
    return degree_ == 1;
  return levels_.front().orbit.size() == degree_;
}

bool is_alternating(const Bsgs& group, std::uint32_t n)
{
  return group.degree() == n && group.order() == factorial(n) / (n >= 2 ? 2 : 1);
}

bool is_symmetric(const Bsgs& group, std::uint32_t n)
{
  return group.degree() == n && group.order() == factorial(n);
}

std::vector<Point> orbit_of(const std::vector<Permutation>& gens, Point x)
{
  if (gens.empty())
    return {x};
  std::vector<bool> seen(gens.front().degree(), false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : gens) {
      const Point y = g(orbit[head]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit;
}

bool is_transitive(const std::vector<Permutation>& gens)
{
  if (gens.empty())
    return false;
  return orbit_of(gens, 0).size() == gens.front().degree();
}

BigInt parity_order_bound(const std::vector<Permutation>& gens)
{
  if (gens.empty())
    return 1;
  const bool all_even = std::all_of(gens.begin(), gens.end(),
                                    [](const Permutation& g) { return parity(g) == Parity::even; });
  BigInt bound = factorial(gens.front().degree());
  if (all_even && gens.front().degree() >= 2)
    bound /= 2;
  return bound;
}

} // namespace expander
