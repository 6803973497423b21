#include "expander/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "expander/error.hpp"

namespace expander {

namespace {

void check_partition(const Partition& p)
{
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 0 || (i > 0 && p[i] > p[i - 1]))
      throw InvalidArgument("not a partition: " + partition_string(p));
}

std::uint32_t weight(const Partition& p)
{
  std::uint32_t s = 0;
  for (auto x : p)
    s += x;
  return s;
}

void generate(std::uint32_t rest, std::uint32_t max_part, Partition& cur, std::vector<Partition>& out)
{
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = std::min(rest, max_part); k >= 1; --k) {
    cur.push_back(k);
    generate(rest - k, k, cur, out);
    cur.pop_back();
  }
}

// Beta-set form: strictly decreasing first-column hook lengths.
std::vector<int> beta_set(const Partition& p)
{
  const int l = static_cast<int>(p.size());
  std::vector<int> b(p.size());
  for (int i = 0; i < l; ++i)
    b[i] = static_cast<int>(p[i]) + (l - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b)
{
  std::sort(b.rbegin(), b.rend());
  const int l = static_cast<int>(b.size());
  Partition p;
  for (int i = 0; i < l; ++i) {
    const int part = b[i] - (l - 1 - i);
    if (part > 0)
      p.push_back(static_cast<std::uint32_t>(part));
  }
  return p;
}

// keyed on (shape, remaining cycle lengths), so one memo can serve many classes
using Memo = std::map<std::pair<Partition, Partition>, BigInt>;

// chi_lambda on the class whose remaining cycle lengths are type[from..].
BigInt mn(const Partition& lambda, const Partition& type, std::size_t from, Memo& memo)
{
  if (from == type.size())
    return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, Partition(type.begin() + static_cast<std::ptrdiff_t>(from), type.end()));
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  const int k = static_cast<int>(type[from]);
  const std::vector<int> b = beta_set(lambda);
  BigInt total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int target = b[i] - k;
    if (target < 0 || std::find(b.begin(), b.end(), target) != b.end())
      continue;
    // Height of the rim hook: beta numbers strictly between target and b[i].
    int between = 0;
    for (int x : b)
      if (x > target && x < b[i])
        ++between;
    std::vector<int> nb = b;
    nb[i] = target;
    BigInt sub = mn(from_beta(nb), type, from + 1, memo);
    total += between % 2 ? -sub : sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

} // namespace

std::vector<Partition> partitions(std::uint32_t n)
{
  if (n < 1 || n > max_partition_n)
    throw InvalidArgument("partitions(n) needs 1 <= n <= " + std::to_string(max_partition_n));
  std::vector<Partition> out;
  Partition cur;
  generate(n, n, cur, out);
  return out;
}

std::string partition_string(const Partition& p)
{
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      s += '+';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(const std::string& text)
{
  Partition p;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, '+')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size())
        throw InvalidArgument("bad partition '" + text + "'");
      p.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad partition '" + text + "'");
    }
  }
  check_partition(p);
  if (p.empty())
    throw InvalidArgument("empty partition");
  return p;
}

Partition conjugate_partition(const Partition& p)
{
  Partition c;
  if (p.empty())
    return c;
  for (std::uint32_t j = 0; j < p[0]; ++j) {
    std::uint32_t len = 0;
    while (len < p.size() && p[len] > j)
      ++len;
    c.push_back(len);
  }
  return c;
}

BigInt dimension(const Partition& lambda)
{
  check_partition(lambda);
  const Partition conj = conjugate_partition(lambda);
  BigInt hooks = 1;
  for (std::uint32_t i = 0; i < lambda.size(); ++i)
    for (std::uint32_t j = 0; j < lambda[i]; ++j)
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(weight(lambda)) / hooks;
}

ClassSpec class_spec(const Partition& type)
{
  check_partition(type);
  ClassSpec c;
  c.type = type;
  const std::uint32_t n = weight(type);
  std::map<std::uint32_t, std::uint32_t> mult;
  std::uint32_t fixed = 0;
  for (auto k : type) {
    ++mult[k];
    if (k == 1)
      ++fixed;
  }
  BigInt centralizer = 1;
  for (auto [k, m] : mult) {
    for (std::uint32_t i = 0; i < m; ++i)
      centralizer *= k;
    centralizer *= factorial(m);
  }
  c.size = factorial(n) / centralizer;
  c.support = n - fixed;
  return c;
}

std::vector<ClassSpec> conjugacy_classes(std::uint32_t n)
{
  std::vector<ClassSpec> out;
  for (const auto& p : partitions(n))
    out.push_back(class_spec(p));
  return out;
}

BigInt character(const Partition& lambda, const Partition& type)
{
  check_partition(lambda);
  check_partition(type);
  if (weight(lambda) != weight(type))
    throw InvalidArgument("character: partition sizes differ");
  Memo memo;
  return mn(lambda, type, 0, memo);
}

Rational normalized_character(const Partition& lambda, const Partition& type)
{
  return Rational(character(lambda, type), dimension(lambda));
}

CharacterTable character_table(std::uint32_t n)
{
  CharacterTable t;
  t.n = n;
  t.irreps = partitions(n);
  t.classes = conjugacy_classes(n);
  Memo memo;
  for (const auto& lambda : t.irreps) {
    std::vector<BigInt> row;
    for (const auto& c : t.classes)
      row.push_back(mn(lambda, c.type, 0, memo));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::string character_table_csv(const CharacterTable& table)
{
  std::string out = "partition";
  for (const auto& c : table.classes)
    out += "," + partition_string(c.type);
  out += "\n";
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    out += partition_string(table.irreps[i]);
    for (const auto& v : table.values[i])
      out += "," + to_decimal(v);
    out += "\n";
  }
  return out;
}

bool rows_orthogonal(const CharacterTable& table)
{
  const BigInt order = factorial(table.n);
  for (std::size_t a = 0; a < table.irreps.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      BigInt s = 0;
      for (std::size_t c = 0; c < table.classes.size(); ++c)
        s += table.classes[c].size * table.values[a][c] * table.values[b][c];
      if (s != (a == b ? order : BigInt(0)))
        return false;
    }
  return true;
}

bool columns_orthogonal(const CharacterTable& table)
{
  const BigInt order = factorial(table.n);
  for (std::size_t c = 0; c < table.classes.size(); ++c)
    for (std::size_t e = 0; e <= c; ++e) {
      BigInt s = 0;
      for (std::size_t l = 0; l < table.irreps.size(); ++l)
        s += table.values[l][c] * table.values[l][e];
      if (s != (c == e ? order / table.classes[c].size : BigInt(0)))
        return false;
    }
  return true;
}

std::uint32_t default_lambda1_cap(std::uint32_t n)
{
  const auto root = static_cast<std::uint32_t>(std::ceil(std::pow(static_cast<double>(n), 0.25) - 1e-12));
  return n > root ? n - root : 0;
}

RoichmanReport roichman_bound_scan(std::uint32_t n, double c, double q,
                                   std::optional<std::uint32_t> lambda1_cap,
                                   std::uint32_t support_floor)
{
  if (n < 1 || n > 14)
    throw InvalidArgument("roichman_bound_scan needs 1 <= n <= 14");
  if (!(q > 0.0 && q < 1.0))
    throw InvalidArgument("q must lie in (0, 1)");
  RoichmanReport r;
  r.n = n;
  r.q = q;
  r.lambda1_cap = lambda1_cap.value_or(default_lambda1_cap(n));
  r.support_floor = support_floor;
  const CharacterTable table = character_table(n);

  struct Pair {
    std::size_t l, k;
    double abs_chi, base;
  };
  std::vector<Pair> pairs;
  for (std::size_t l = 0; l < table.irreps.size(); ++l) {
    const Partition& lambda = table.irreps[l];
    if (lambda[0] > r.lambda1_cap)
      continue;
    const double top = std::max(lambda[0], static_cast<std::uint32_t>(lambda.size()));
    const double base = std::max(top / n, q);
    const BigInt dim = dimension(lambda);
    for (std::size_t k = 0; k < table.classes.size(); ++k) {
      if (table.classes[k].support < support_floor)
        continue;
      const double abs_chi =
          std::abs(static_cast<double>(Rational(table.values[l][k], dim)));
      pairs.push_back({l, k, abs_chi, base});
    }
  }
  r.pairs_checked = static_cast<std::uint32_t>(pairs.size());

  // |chi| <= b^(c s)  <=>  c <= ln|chi| / (s ln b) when 0 < |chi| and b < 1.
  for (const auto& p : pairs) {
    if (p.abs_chi == 0.0)
      continue;
    const double s = table.classes[p.k].support;
    if (p.base >= 1.0 || s == 0.0) {
      if (p.abs_chi > 1.0)
        r.fitted_c = 0.0;
      continue;
    }
    ++r.pairs_constraining;
    const double limit = std::log(p.abs_chi) / (s * std::log(p.base));
    if (!r.fitted_c || limit < *r.fitted_c) {
      r.fitted_c = limit;
      r.binding_lambda = table.irreps[p.l];
      r.binding_type = table.classes[p.k].type;
    }
  }

  r.c = c > 0.0 ? c : r.fitted_c.value_or(0.0);
  for (const auto& p : pairs) {
    const double bound = std::pow(p.base, r.c * table.classes[p.k].support);
    // relative slack absorbs the rounding of the fitted exponent
    if (p.abs_chi > bound * (1.0 + 1e-12))
      r.violations.push_back({table.irreps[p.l], table.classes[p.k].type, p.abs_chi, bound});
  }
  r.passes = r.violations.empty();
  return r;
}

} // namespace expander
