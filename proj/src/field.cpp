#include "expander/field.hpp"

#include <algorithm>
#include <map>

#include "expander/error.hpp"

namespace expander {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    result.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1)
    result.push_back(n);
  return result;
}

namespace {

using Poly = std::vector<std::uint32_t>; // little-endian coefficients

void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p)
{
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    trim(a);
  }
  return a;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp)
{
  std::uint32_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

bool x_is_primitive(std::uint32_t p, const Poly& modulus)
{
  const auto field = GaloisField::make(p, modulus);
  if (field->degree() == 1)
    return true;
  return field->multiplicative_order(field->variable()) == field->order() - 1;
}

} // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly)
{
  Poly f = poly;
  trim(f);
  if (f.size() < 2)
    return false;
  const std::uint32_t degree = static_cast<std::uint32_t>(f.size() - 1);
  if (f.back() != 1)
    throw InvalidArgument("is_irreducible expects a monic polynomial");
  for (std::uint32_t k = 1; 2 * k <= degree; ++k) {
    const std::uint32_t count = ipow(p, k);
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly g(k + 1);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> table_modulus(std::uint32_t p, std::uint32_t m)
{
  // Primitive trinomials/pentanomials over GF(2).
  static const std::map<std::uint32_t, Poly> binary = {
      {1, {0, 1}},
      {2, {1, 1, 1}},
      {3, {1, 1, 0, 1}},
      {4, {1, 1, 0, 0, 1}},
      {5, {1, 0, 1, 0, 0, 1}},
      {6, {1, 1, 0, 0, 0, 0, 1}},
      {7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
  };
  if (m == 1)
    return {0, 1};
  if (p == 2) {
    auto it = binary.find(m);
    if (it != binary.end())
      return it->second;
  }
  return {};
}

std::shared_ptr<const GaloisField> GaloisField::make(std::uint32_t p, std::uint32_t m)
{
  if (!is_prime(p))
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0)
    throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order)
      throw InvalidArgument("field GF(" + std::to_string(p) + "^" + std::to_string(m) +
                            ") exceeds the supported order " + std::to_string(max_order));
  }
  Poly modulus = table_modulus(p, m);
  if (modulus.empty()) {
    // Smallest monic primitive polynomial, ordered by the code of its lower
    // coefficients.
    const std::uint32_t count = static_cast<std::uint32_t>(q);
    for (std::uint32_t code = 1; code < count && modulus.empty(); ++code) {
      Poly candidate(m + 1);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        candidate[i] = c % p;
        c /= p;
      }
      candidate[m] = 1;
      if (candidate[0] != 0 && is_irreducible(p, candidate) && x_is_primitive(p, candidate))
        modulus = candidate;
    }
  }
  return make(p, std::move(modulus));
}

std::shared_ptr<const GaloisField> GaloisField::make(std::uint32_t p, std::vector<std::uint32_t> modulus)
{
  if (!is_prime(p))
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw InvalidArgument("field modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p)
      throw InvalidArgument("field modulus coefficient not reduced mod p");
  if (!is_irreducible(p, modulus))
    throw InvalidArgument("field modulus is reducible");
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i)
    q *= p;
  if (q > max_order)
    throw InvalidArgument("field order exceeds the supported maximum");
  return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(modulus)));
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(ipow(p, m_)),
      modulus_(std::move(modulus))
{
  const std::size_t q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  std::vector<Poly> polys(q);
  for (std::uint32_t a = 0; a < q; ++a)
    polys[a] = coefficients({a});
  auto encode = [this](const Poly& c) {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;)
      code = code * p_ + c[i];
    return code;
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly n(m_);
    for (std::uint32_t i = 0; i < m_; ++i)
      n[i] = (p_ - polys[a][i]) % p_;
    neg_[a] = encode(n);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly s(m_);
      for (std::uint32_t i = 0; i < m_; ++i)
        s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * q + b] = encode(s);
      Poly prod(2 * m_, 0);
      for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
          prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[a * q + b] = encode(r);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = b;
        break;
      }
}

FieldElem GaloisField::variable() const
{
  Poly x(m_, 0);
  if (m_ >= 2)
    x[1] = 1;
  else
    x[0] = (p_ - modulus_[0]) % p_;
  return from_coefficients(x);
}

FieldElem GaloisField::from_int(long long value) const
{
  long long r = value % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem GaloisField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const
{
  if (coeffs.size() > m_)
    throw InvalidArgument("too many coefficients for field element");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_)
      throw InvalidArgument("field coefficient not reduced mod p");
    code = code * p_ + coeffs[i];
  }
  return {code};
}

std::vector<std::uint32_t> GaloisField::coefficients(FieldElem a) const
{
  std::vector<std::uint32_t> c(m_);
  std::uint32_t code = a.code;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

FieldElem GaloisField::inv(FieldElem a) const
{
  if (a.code == 0 || a.code >= q_)
    throw InvalidArgument("inversion of zero in " + describe());
  return {inv_[a.code]};
}

FieldElem GaloisField::pow(FieldElem a, std::uint64_t e) const
{
  FieldElem result = one();
  while (e != 0) {
    if (e & 1u)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return result;
}

std::uint32_t GaloisField::multiplicative_order(FieldElem a) const
{
  if (a.code == 0)
    throw InvalidArgument("zero has no multiplicative order");
  std::uint32_t order = 1;
  for (FieldElem x = a; x != one(); x = mul(x, a))
    ++order;
  return order;
}

FieldElem GaloisField::primitive_element() const
{
  const std::uint64_t n = q_ - 1;
  const auto primes = prime_factors(n);
  for (std::uint32_t code = 1; code < q_; ++code) {
    const FieldElem a{code};
    bool primitive = true;
    for (auto r : primes)
      if (pow(a, n / r) == one()) {
        primitive = false;
        break;
      }
    if (primitive)
      return a;
  }
  return one(); // GF(2): the only nonzero element
}

std::string GaloisField::format(FieldElem a) const
{
  const auto c = coefficients(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (p_ > 10 && i != 0)
      out += '.';
    out += std::to_string(c[i]);
  }
  return out;
}

FieldElem GaloisField::parse(std::string_view text) const
{
  Poly c;
  if (p_ > 10) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find('.', start), text.size());
      c.push_back(static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, end - start)))));
      start = end + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw InvalidArgument("bad field element '" + std::string(text) + "'");
      c.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  if (c.size() != m_)
    throw InvalidArgument("field element '" + std::string(text) + "' must have " +
                          std::to_string(m_) + " coefficients");
  return from_coefficients(c);
}

std::string GaloisField::describe() const
{
  std::string out = "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ") mod ";
  for (auto c : modulus_)
    out += std::to_string(c);
  return out;
}

} // namespace expander
