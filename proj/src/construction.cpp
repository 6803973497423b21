#include "expander/construction.hpp"

#include <algorithm>
#include <numeric>

#include "expander/bsgs.hpp"
#include "expander/error.hpp"
#include "expander/rng.hpp"

namespace expander {

CubeIndex::CubeIndex(std::uint32_t K, std::uint32_t d) : K_(K), d_(d), size_(1)
{
  if (K < 2)
    throw InvalidArgument("cube side K must be at least 2");
  if (d < 1)
    throw InvalidArgument("cube dimension d must be at least 1");
  for (std::uint32_t j = 0; j < d; ++j) {
    stride_.push_back(size_);
    size_ *= K;
  }
}

std::uint32_t CubeIndex::index(const std::vector<std::uint32_t>& coords) const
{
  if (coords.size() != d_)
    throw InvalidArgument("cube coordinates have the wrong length");
  std::uint32_t idx = 0;
  for (std::uint32_t j = 0; j < d_; ++j) {
    if (coords[j] >= K_)
      throw InvalidArgument("cube coordinate out of range");
    idx += coords[j] * stride_[j];
  }
  return idx;
}

std::vector<std::uint32_t> CubeIndex::coords(std::uint32_t index) const
{
  if (index >= size_)
    throw InvalidArgument("cube index out of range");
  std::vector<std::uint32_t> x(d_);
  for (std::uint32_t j = 0; j < d_; ++j) {
    x[j] = index % K_;
    index /= K_;
  }
  return x;
}

std::uint32_t CubeIndex::copy_of(std::uint32_t index, std::uint32_t axis) const
{
  const std::uint32_t low = index % stride_[axis];
  const std::uint32_t high = index / (stride_[axis] * K_);
  return low + high * stride_[axis];
}

std::vector<std::uint32_t> CubeIndex::copy_coords(std::uint32_t copy) const
{
  if (copy >= copies())
    throw InvalidArgument("copy index out of range");
  std::vector<std::uint32_t> x(d_ - 1);
  for (auto& c : x) {
    c = copy % K_;
    copy /= K_;
  }
  return x;
}

std::uint32_t CubeIndex::fiber_point(std::uint32_t axis, std::uint32_t copy, std::uint32_t local) const
{
  const std::uint32_t low = copy % stride_[axis];
  const std::uint32_t high = copy / stride_[axis];
  return low + local * stride_[axis] + high * stride_[axis] * K_;
}

CubeIndex cube_enumeration(std::uint32_t K, std::uint32_t d, std::uint64_t budget)
{
  std::uint64_t n = 1;
  for (std::uint32_t j = 0; j < d; ++j) {
    n *= K;
    if (n > budget)
      throw BudgetExceeded("cube " + std::to_string(K) + "^" + std::to_string(d) +
                           " exceeds the point budget of " + std::to_string(budget));
  }
  return CubeIndex(K, d);
}

Permutation embed_axis(const Permutation& local, std::uint32_t copy, std::uint32_t axis,
                       const CubeIndex& cube)
{
  if (local.degree() != cube.side())
    throw InvalidArgument("local permutation degree must equal K");
  if (axis >= cube.dim())
    throw InvalidArgument("axis out of range");
  if (copy >= cube.copies())
    throw InvalidArgument("copy index out of range");
  std::vector<Point> images(cube.size());
  std::iota(images.begin(), images.end(), Point{0});
  for (std::uint32_t x = 0; x < cube.side(); ++x)
    images[cube.fiber_point(axis, copy, x)] = cube.fiber_point(axis, copy, local(x));
  return Permutation(std::move(images));
}

Permutation embed_axis(const Permutation& local, const std::vector<std::uint32_t>& copy,
                       std::uint32_t axis, const CubeIndex& cube)
{
  if (copy.size() + 1 != cube.dim())
    throw InvalidArgument("copy tuple must have d-1 coordinates");
  std::uint32_t c = 0;
  for (std::size_t j = copy.size(); j-- > 0;) {
    if (copy[j] >= cube.side())
      throw InvalidArgument("copy coordinate out of range");
    c = c * cube.side() + copy[j];
  }
  return embed_axis(local, c, axis, cube);
}

LocalGroup make_local_group(const LocalGroupSpec& spec)
{
  FieldPtr base = GaloisField::make(spec.p, 1);
  FieldPtr ext = spec.modulus.empty() ? GaloisField::make(spec.p, spec.m)
                                      : GaloisField::make(spec.p, spec.modulus);
  if (ext->degree() != spec.m)
    throw InvalidArgument("field modulus degree does not match m");
  PointEnumeration points(base, spec.m, spec.kind);
  auto gens = base_generating_set(base, spec.m, spec.style);
  Matrix cycle = k_cycle_element(*ext, points);
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    perms.push_back(perm_from_matrix(g, points));
    if (parity(perms.back()) != Parity::even)
      throw CertificationFailure("local generator acts by an odd permutation");
  }
  Permutation cyc = perm_from_matrix(cycle, points);
  BsgsOptions options;
  options.order_bound = sl_order(base->order(), spec.m);
  const BigInt order = Bsgs::build(perms, options).order();
  return LocalGroup{spec, base, ext, std::move(points), std::move(gens), std::move(perms),
                    std::move(cycle), std::move(cyc), order};
}

namespace {

std::uint64_t element_order(const Permutation& p)
{
  std::uint64_t result = 1;
  for (const auto& c : cycles(p))
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

// Orders of a fixed list of short words; automorphisms preserve all of them.
std::vector<std::uint64_t> word_fingerprint(const std::vector<Permutation>& t)
{
  std::vector<std::uint64_t> f;
  const std::size_t k = t.size();
  for (std::size_t a = 0; a < k; ++a)
    f.push_back(element_order(t[a]));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b) {
        const Permutation ab = compose(t[a], t[b]);
        f.push_back(element_order(ab));
        f.push_back(element_order(compose(t[a], inverse(t[b]))));
        for (std::size_t c = 0; c < k; ++c)
          f.push_back(element_order(compose(ab, t[c])));
      }
  return f;
}

BigInt generated_order(const std::vector<Permutation>& gens, const BigInt& bound)
{
  BsgsOptions options;
  options.order_bound = bound;
  return Bsgs::build(gens, options).order();
}

Permutation direct_sum(const std::vector<Permutation>& parts)
{
  std::vector<Point> images;
  Point offset = 0;
  for (const auto& p : parts) {
    for (Point x : p.images())
      images.push_back(x + offset);
    offset += p.degree();
  }
  return Permutation(std::move(images));
}

} // namespace

bool tuples_inequivalent(const std::vector<Permutation>& a, const std::vector<Permutation>& b,
                         const BigInt& h_order)
{
  if (a.size() != b.size())
    throw InvalidArgument("tuples of different lengths");
  if (word_fingerprint(a) != word_fingerprint(b))
    return true;
  std::vector<Permutation> pairs;
  for (std::size_t j = 0; j < a.size(); ++j)
    pairs.push_back(direct_sum({a[j], b[j]}));
  const BigInt full = h_order * h_order;
  return generated_order(pairs, full) == full;
}

PowerGenSet power_generating_set(const LocalGroup& h, std::uint32_t copies,
                                 const PowerOptions& options)
{
  if (copies == 0)
    throw InvalidArgument("power_generating_set needs at least one copy");
  if (h.generators.empty())
    throw InvalidArgument("base generating set is empty");

  // Diagonal sources: S, padded to four elements with products of neighbours.
  std::vector<Matrix> sources = h.generators;
  for (std::size_t j = 0; sources.size() < 4; ++j)
    sources.push_back(h.generators[j % h.generators.size()] *
                      h.generators[(j + 1) % h.generators.size()]);
  const std::size_t k = sources.size();

  PowerGenSet result;
  result.copies = copies;
  if (copies == 1) {
    for (std::size_t j = 0; j < h.generators.size(); ++j)
      result.elements.push_back({{h.generator_perms[j]}, "diag:" + std::to_string(j), std::nullopt});
    result.twists.assign(1, std::vector<std::uint32_t>(h.generators.size(), 0));
    result.hall_certified = true;
    result.bsgs_order = h.order;
    return result;
  }

  // Automorphism list: conjugation by h for h in {I} u S u {s_a s_b}, each
  // optionally preceded by transpose-inverse.
  std::vector<Matrix> conjugators{Matrix::identity(h.base_field, h.spec.m)};
  for (const auto& g : h.generators)
    conjugators.push_back(g);
  for (std::size_t a = 0; a < h.generators.size(); ++a)
    for (std::size_t b = 0; b < h.generators.size(); ++b)
      if (a != b)
        conjugators.push_back(h.generators[a] * h.generators[b]);
  const std::uint32_t n_auts = static_cast<std::uint32_t>(2 * conjugators.size());
  auto twist = [&](const Matrix& s, std::uint32_t aut) {
    const Matrix base = (aut % 2 == 1) ? transpose_inverse(s) : s;
    return perm_from_matrix(conjugate(base, conjugators[aut / 2]), h.points);
  };

  std::vector<std::vector<Permutation>> tuples; // tuples[c][j]
  std::vector<std::vector<std::uint64_t>> prints;
  const bool hall = copies <= options.hall_copy_cap;
  for (std::uint32_t c = 0; c < copies; ++c) {
    PhiloxStream rng(options.seed, c);
    bool accepted = false;
    for (std::uint32_t attempt = 0; attempt < options.max_attempts && !accepted; ++attempt) {
      std::vector<std::uint32_t> choice(k, 0);
      if (c != 0)
        for (auto& a : choice)
          a = static_cast<std::uint32_t>(rng.below(n_auts));
      std::vector<Permutation> tuple;
      for (std::size_t j = 0; j < k; ++j)
        tuple.push_back(twist(sources[j], choice[j]));
      if (generated_order(tuple, h.order) != h.order)
        continue;
      auto print = word_fingerprint(tuple);
      bool distinct = true;
      for (std::uint32_t e = 0; e < c && distinct; ++e) {
        if (print != prints[e])
          continue;
        distinct = hall && tuples_inequivalent(tuple, tuples[e], h.order);
      }
      if (!distinct)
        continue;
      tuples.push_back(std::move(tuple));
      prints.push_back(std::move(print));
      result.twists.push_back(std::move(choice));
      accepted = true;
    }
    if (!accepted)
      throw CertificationFailure("no admissible twist found for copy " + std::to_string(c));
  }
  result.hall_certified = hall;

  for (std::size_t j = 0; j < k; ++j) {
    PowerElement e;
    e.source = "diag:" + std::to_string(j);
    for (std::uint32_t c = 0; c < copies; ++c)
      e.components.push_back(tuples[c][j]);
    result.elements.push_back(std::move(e));
  }
  const Permutation id(h.degree());
  for (std::uint32_t sep = 0; sep < 2; ++sep) {
    const std::uint32_t copy = sep == 0 ? 0 : copies - 1;
    PowerElement e;
    e.source = "sep:" + std::to_string(sep);
    e.copy = copy;
    e.components.assign(copies, id);
    e.components[copy] = tuples[copy][sep % k];
    result.elements.push_back(std::move(e));
  }

  if (copies <= options.bsgs_copy_cap) {
    BigInt expected = 1;
    for (std::uint32_t c = 0; c < copies; ++c)
      expected *= h.order;
    const BigInt order = power_group_order(result, expected);
    if (order != expected)
      throw CertificationFailure("power generating set generates a group of order " +
                                 to_decimal(order) + ", expected " + to_decimal(expected));
    result.bsgs_order = order;
  }
  return result;
}

BigInt power_group_order(const PowerGenSet& set, const std::optional<BigInt>& order_bound)
{
  std::vector<Permutation> gens;
  for (const auto& e : set.elements)
    gens.push_back(direct_sum(e.components));
  BsgsOptions options;
  options.order_bound = order_bound;
  return Bsgs::build(gens, options).order();
}

std::string to_string(FamilyKind kind)
{
  switch (kind) {
  case FamilyKind::F_N: return "F_N";
  case FamilyKind::F_n: return "F_n";
  case FamilyKind::F_tilde_n: return "F_tilde_n";
  case FamilyKind::C: return "C";
  case FamilyKind::Gamma_bar: return "Gamma_bar";
  case FamilyKind::custom: return "custom";
  }
  return "custom";
}

FamilyKind parse_family_kind(const std::string& text)
{
  for (auto k : {FamilyKind::F_N, FamilyKind::F_n, FamilyKind::F_tilde_n, FamilyKind::C,
                 FamilyKind::Gamma_bar, FamilyKind::custom})
    if (to_string(k) == text)
      return k;
  throw InvalidArgument("unknown family kind '" + text + "'");
}

namespace {

FamilyParams params_of(const CubeIndex& cube, const LocalGroup& h)
{
  FamilyParams params;
  params.K = cube.side();
  params.d = cube.dim();
  params.p = h.spec.p;
  params.m = h.spec.m;
  params.modulus = h.extension_field->modulus();
  params.enumeration = h.spec.kind == EnumerationKind::nonzero_vectors ? "nonzero-vectors"
                                                                        : "projective-plane";
  params.style = to_string(h.spec.style);
  return params;
}

} // namespace

GeneratingFamily build_F_N(const CubeIndex& cube, const LocalGroup& h, const PowerGenSet& s)
{
  if (cube.side() != h.degree())
    throw InvalidArgument("cube side does not match the local action degree");
  if (s.copies != cube.copies())
    throw InvalidArgument("power generating set has " + std::to_string(s.copies) +
                          " copies, the cube needs K^(d-1) = " + std::to_string(cube.copies()));
  GeneratingFamily f;
  f.kind = FamilyKind::F_N;
  f.degree = cube.size();
  f.params = params_of(cube, h);
  for (std::uint32_t axis = 0; axis < cube.dim(); ++axis)
    for (const auto& e : s.elements) {
      std::vector<Point> images(cube.size());
      for (std::uint32_t x = 0; x < cube.size(); ++x) {
        const std::uint32_t c = cube.copy_of(x, axis);
        const std::uint32_t local = cube.coords(x)[axis];
        images[x] = cube.fiber_point(axis, c, e.components[c](local));
      }
      f.elements.emplace_back(std::move(images));
      f.labels.push_back({axis, e.source, e.copy, std::nullopt});
    }
  for (const auto& g : f.elements)
    if (parity(g) != Parity::even)
      throw CertificationFailure("F_N element is odd");
  return f;
}

Construction construct_family(const LocalGroupSpec& spec, std::uint32_t d,
                              const PowerOptions& options, std::uint64_t point_budget)
{
  LocalGroup local = make_local_group(spec);
  CubeIndex cube = cube_enumeration(local.degree(), d, point_budget);
  PowerGenSet power = power_generating_set(local, cube.copies(), options);
  GeneratingFamily family = build_F_N(cube, local, power);
  family.params.seed = options.seed;
  return Construction{std::move(local), std::move(cube), std::move(power), std::move(family)};
}

Permutation abelian_family(const CubeIndex& cube, const LocalGroup& h, std::uint32_t axis,
                           const std::vector<std::uint32_t>& exponents)
{
  if (exponents.size() != cube.copies())
    throw InvalidArgument("exponent map must cover every copy");
  if (axis >= cube.dim())
    throw InvalidArgument("axis out of range");
  std::vector<Permutation> powers;
  powers.reserve(cube.side());
  powers.emplace_back(cube.side());
  for (std::uint32_t e = 1; e < cube.side(); ++e)
    powers.push_back(compose(powers.back(), h.cycle_perm));
  std::vector<Point> images(cube.size());
  for (std::uint32_t x = 0; x < cube.size(); ++x) {
    const std::uint32_t c = cube.copy_of(x, axis);
    const std::uint32_t local = cube.coords(x)[axis];
    images[x] = cube.fiber_point(axis, c, powers[exponents[c] % cube.side()](local));
  }
  return Permutation(std::move(images));
}

GeneratingFamily enumerate_C_sample(const CubeIndex& cube, const LocalGroup& h,
                                    std::uint32_t count, std::uint64_t seed)
{
  GeneratingFamily f;
  f.kind = FamilyKind::C;
  f.degree = cube.size();
  f.params = params_of(cube, h);
  f.params.seed = seed;
  for (std::uint32_t j = 0; j < count; ++j) {
    PhiloxStream rng(seed, j);
    const auto axis = static_cast<std::uint32_t>(rng.below(cube.dim()));
    std::vector<std::uint32_t> exponents(cube.copies());
    for (auto& e : exponents)
      e = static_cast<std::uint32_t>(rng.below(cube.side()));
    f.elements.push_back(abelian_family(cube, h, axis, exponents));
    f.labels.push_back({axis, "C:" + std::to_string(j), std::nullopt, std::nullopt});
  }
  return f;
}

std::vector<std::uint32_t> padding_windows(std::uint32_t n, std::uint32_t n_s, std::uint32_t overlap)
{
  if (n_s < 7)
    throw InvalidArgument("padding needs a base degree of at least 7");
  if (n < n_s)
    throw InvalidArgument("cannot pad to n = " + std::to_string(n) + " < n_s = " + std::to_string(n_s));
  if (overlap == 0)
    overlap = std::max<std::uint32_t>(5, (n_s + 1) / 2);
  if (overlap < 5 || overlap >= n_s)
    throw InvalidArgument("window overlap must lie in [5, n_s)");
  const std::uint32_t step = n_s - overlap;
  std::vector<std::uint32_t> starts;
  for (std::uint32_t t = 0; t + n_s < n; t += step)
    starts.push_back(t);
  starts.push_back(n - n_s);
  return starts;
}

GeneratingFamily pad_to_all_n(std::uint32_t n, const GeneratingFamily& base, std::uint32_t overlap)
{
  const std::uint32_t n_s = base.degree;
  const auto windows = padding_windows(n, n_s, overlap);
  GeneratingFamily f;
  f.kind = FamilyKind::F_n;
  f.degree = n;
  f.params = base.params;
  f.params.base_degree = n_s;
  f.params.windows = windows;
  for (std::uint32_t w = 0; w < windows.size(); ++w) {
    const std::uint32_t t = windows[w];
    for (std::size_t e = 0; e < base.elements.size(); ++e) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::uint32_t x = 0; x < n_s; ++x)
        images[t + x] = t + base.elements[e](x);
      f.elements.emplace_back(std::move(images));
      ElementLabel label = e < base.labels.size() ? base.labels[e] : ElementLabel{};
      label.window = w;
      f.labels.push_back(std::move(label));
    }
  }
  return f;
}

FamilyCertificate certify_family(const GeneratingFamily& f, std::uint64_t seed)
{
  FamilyCertificate cert;
  if (f.elements.empty())
    throw InvalidArgument("cannot certify an empty family");
  for (const auto& g : f.elements)
    if (g.degree() != f.degree)
      throw InvalidArgument("family element degree differs from the family degree");
  cert.transitive = is_transitive(f.elements);
  cert.all_even = std::all_of(f.elements.begin(), f.elements.end(),
                              [](const Permutation& g) { return parity(g) == Parity::even; });
  cert.expected = parity_order_bound(f.elements);
  BsgsOptions options;
  options.seed = seed;
  options.order_bound = cert.expected;
  if (cert.transitive) {
    Bsgs b = Bsgs::build(f.elements, options);
    cert.order = b.order();
    cert.base = b.base();
    cert.strong_generators = b.strong_generators();
  } else {
    // An intransitive group is a proper subgroup; its order is still computed.
    options.order_bound.reset();
    Bsgs b = Bsgs::build(f.elements, options);
    cert.order = b.order();
    cert.base = b.base();
    cert.strong_generators = b.strong_generators();
  }
  cert.ok = cert.transitive && cert.order == cert.expected;
  return cert;
}

GeneratingFamily sym_variant(const GeneratingFamily& f, OddElement odd)
{
  const FamilyCertificate cert = certify_family(f);
  if (!cert.all_even || !cert.ok)
    throw InvalidArgument("sym_variant needs a family generating Alt(" + std::to_string(f.degree) + ")");
  GeneratingFamily g = f;
  g.kind = FamilyKind::F_tilde_n;
  if (odd == OddElement::transposition) {
    g.elements.push_back(Permutation::from_cycles(f.degree, {{0, 1}}));
    g.labels.push_back({std::nullopt, "odd:transposition", std::nullopt, std::nullopt});
  } else {
    if (f.degree < 6)
      throw InvalidArgument("the odd involution (0 1)(2 3)(4 5) needs degree >= 6");
    g.elements.push_back(Permutation::from_cycles(f.degree, {{0, 1}, {2, 3}, {4, 5}}));
    g.labels.push_back({std::nullopt, "odd:involution", std::nullopt, std::nullopt});
  }
  return g;
}

} // namespace expander
