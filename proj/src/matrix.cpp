#include "expander/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "expander/bsgs.hpp"
#include "expander/error.hpp"

namespace expander {

Matrix::Matrix(FieldPtr field, std::uint32_t dim)
    : field_(std::move(field)), dim_(dim), entries_(std::size_t{dim} * dim, FieldElem{0})
{
  if (!field_)
    throw InvalidArgument("matrix needs a field");
  if (dim == 0)
    throw InvalidArgument("matrix dimension must be positive");
}

Matrix Matrix::identity(FieldPtr field, std::uint32_t dim)
{
  Matrix m(std::move(field), dim);
  for (std::uint32_t i = 0; i < dim; ++i)
    m.at(i, i) = m.field_->one();
  return m;
}

Matrix Matrix::transvection(FieldPtr field, std::uint32_t dim, std::uint32_t row, std::uint32_t col,
                            FieldElem alpha)
{
  if (row == col || row >= dim || col >= dim)
    throw InvalidArgument("transvection needs distinct in-range indices");
  Matrix m = identity(std::move(field), dim);
  m.at(row, col) = alpha;
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const
{
  if (dim_ != other.dim_ || !(*field_ == *other.field_))
    throw InvalidArgument("matrix product: shape or field mismatch");
  const GaloisField& f = *field_;
  Matrix r(field_, dim_);
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t k = 0; k < dim_; ++k) {
      const FieldElem a = at(i, k);
      if (a.code == 0)
        continue;
      for (std::uint32_t j = 0; j < dim_; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(a, other.at(k, j)));
    }
  return r;
}

Matrix Matrix::transpose() const
{
  Matrix r(field_, dim_);
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = 0; j < dim_; ++j)
      r.at(j, i) = at(i, j);
  return r;
}

FieldElem Matrix::determinant() const
{
  const GaloisField& f = *field_;
  Matrix a = *this;
  FieldElem det = f.one();
  for (std::uint32_t col = 0; col < dim_; ++col) {
    std::uint32_t pivot = col;
    while (pivot < dim_ && a.at(pivot, col).code == 0)
      ++pivot;
    if (pivot == dim_)
      return f.zero();
    if (pivot != col) {
      for (std::uint32_t j = 0; j < dim_; ++j)
        std::swap(a.at(pivot, j), a.at(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(col, col));
    const FieldElem inv = f.inv(a.at(col, col));
    for (std::uint32_t r = col + 1; r < dim_; ++r) {
      const FieldElem factor = f.mul(a.at(r, col), inv);
      if (factor.code == 0)
        continue;
      for (std::uint32_t j = col; j < dim_; ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
    }
  }
  return det;
}

Matrix Matrix::inverse() const
{
  const GaloisField& f = *field_;
  Matrix a = *this;
  Matrix inv = identity(field_, dim_);
  for (std::uint32_t col = 0; col < dim_; ++col) {
    std::uint32_t pivot = col;
    while (pivot < dim_ && a.at(pivot, col).code == 0)
      ++pivot;
    if (pivot == dim_)
      throw InvalidArgument("matrix is singular");
    for (std::uint32_t j = 0; j < dim_; ++j) {
      std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const FieldElem scale = f.inv(a.at(col, col));
    for (std::uint32_t j = 0; j < dim_; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), scale);
      inv.at(col, j) = f.mul(inv.at(col, j), scale);
    }
    for (std::uint32_t r = 0; r < dim_; ++r) {
      if (r == col || a.at(r, col).code == 0)
        continue;
      const FieldElem factor = a.at(r, col);
      for (std::uint32_t j = 0; j < dim_; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

Matrix Matrix::power(std::uint64_t e) const
{
  Matrix result = identity(field_, dim_);
  Matrix base = *this;
  while (e != 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Matrix::is_identity() const { return *this == identity(field_, dim_); }

std::vector<FieldElem> Matrix::apply_row(const std::vector<FieldElem>& v) const
{
  if (v.size() != dim_)
    throw InvalidArgument("vector length does not match matrix dimension");
  const GaloisField& f = *field_;
  std::vector<FieldElem> w(dim_, f.zero());
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (v[i].code == 0)
      continue;
    for (std::uint32_t j = 0; j < dim_; ++j)
      w[j] = f.add(w[j], f.mul(v[i], at(i, j)));
  }
  return w;
}

std::string to_string(const Matrix& a)
{
  std::string out;
  for (std::uint32_t i = 0; i < a.dim(); ++i) {
    if (i != 0)
      out += '\n';
    for (std::uint32_t j = 0; j < a.dim(); ++j) {
      if (j != 0)
        out += ' ';
      out += a.field()->format(a.at(i, j));
    }
  }
  return out;
}

Matrix parse_matrix(FieldPtr field, std::string_view text)
{
  std::vector<std::vector<FieldElem>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::vector<FieldElem> row;
    std::string word;
    while (words >> word)
      row.push_back(field->parse(word));
    if (!row.empty())
      rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw InvalidArgument("empty matrix text");
  Matrix m(field, static_cast<std::uint32_t>(rows.size()));
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InvalidArgument("matrix text is not square");
    for (std::uint32_t j = 0; j < rows.size(); ++j)
      m.at(i, j) = rows[i][j];
  }
  return m;
}

BigInt sl_order(std::uint32_t q, std::uint32_t dim)
{
  BigInt order = 1;
  BigInt qq = q;
  for (std::uint32_t i = 0; i < dim * (dim - 1) / 2; ++i)
    order *= qq;
  BigInt qi = qq;
  for (std::uint32_t i = 2; i <= dim; ++i) {
    qi *= qq;
    order *= qi - 1;
  }
  return order;
}

PointEnumeration::PointEnumeration(FieldPtr field, std::uint32_t dim, EnumerationKind kind)
    : field_(std::move(field)), dim_(dim), kind_(kind)
{
  if (kind == EnumerationKind::projective_plane && dim != 3)
    throw InvalidArgument("projective-plane enumeration needs dimension 3");
  const std::uint64_t q = field_->order();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    total *= q;
    if (total > (1u << 22))
      throw BudgetExceeded("point enumeration of F_q^dim exceeds the vector budget");
  }
  index_.assign(total, std::numeric_limits<std::uint32_t>::max());
  for (std::uint64_t c = 1; c < total; ++c) {
    std::vector<FieldElem> v(dim);
    std::uint64_t rest = c;
    for (std::uint32_t i = dim; i-- > 0;) {
      v[i] = FieldElem{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    if (kind == EnumerationKind::projective_plane) {
      std::uint32_t lead = 0;
      while (v[lead].code == 0)
        ++lead;
      if (v[lead] != field_->one())
        continue;
    }
    index_[c] = static_cast<std::uint32_t>(points_.size());
    points_.push_back(std::move(v));
  }
}

std::uint64_t PointEnumeration::code(const std::vector<FieldElem>& v) const
{
  std::uint64_t c = 0;
  for (FieldElem e : v)
    c = c * field_->order() + e.code;
  return c;
}

std::uint32_t PointEnumeration::index_of(const std::vector<FieldElem>& v) const
{
  if (v.size() != dim_)
    throw InvalidArgument("vector length does not match enumeration");
  std::vector<FieldElem> w = v;
  if (kind_ == EnumerationKind::projective_plane) {
    std::uint32_t lead = 0;
    while (lead < dim_ && w[lead].code == 0)
      ++lead;
    if (lead == dim_)
      throw InvalidArgument("zero vector has no projective point");
    const FieldElem scale = field_->inv(w[lead]);
    for (auto& e : w)
      e = field_->mul(e, scale);
  }
  const std::uint32_t idx = index_.at(code(w));
  if (idx == std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("vector is not an enumerated point");
  return idx;
}

Permutation perm_from_matrix(const Matrix& m, const PointEnumeration& points)
{
  if (m.dim() != points.dim() || !(*m.field() == *points.field()))
    throw InvalidArgument("matrix and point enumeration do not match");
  std::vector<Point> images(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i)
    images[i] = points.index_of(m.apply_row(points.point(i)));
  Permutation p(std::move(images));
  if (points.kind() == EnumerationKind::nonzero_vectors && parity(p) != Parity::even)
    throw CertificationFailure("matrix acts by an odd permutation on nonzero vectors");
  return p;
}

Matrix k_cycle_element(const GaloisField& extension, const PointEnumeration& points)
{
  const FieldPtr& base = points.field();
  if (base->degree() != 1 || base->characteristic() != extension.characteristic())
    throw InvalidArgument("k_cycle_element needs points over the prime field of the extension");
  if (points.dim() != extension.degree())
    throw InvalidArgument("k_cycle_element: enumeration dimension must equal the extension degree");
  const std::uint32_t p = extension.characteristic();
  std::uint64_t exponent = 1;
  if (points.kind() == EnumerationKind::nonzero_vectors) {
    if (p != 2)
      throw InvalidArgument("a Singer cycle on all nonzero vectors lies in SL only over GF(2)");
  } else {
    exponent = p - 1;
  }
  const FieldElem beta = extension.pow(extension.primitive_element(), exponent);
  const std::uint32_t m = extension.degree();
  Matrix a(base, m);
  FieldElem row = beta; // x^i * beta
  const FieldElem x = extension.variable();
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto c = extension.coefficients(row);
    for (std::uint32_t j = 0; j < m; ++j)
      a.at(i, j) = FieldElem{c[j]};
    row = extension.mul(row, x);
  }
  if (a.determinant() != base->one())
    throw CertificationFailure("cycle element is not in SL");
  const Permutation cyc = perm_from_matrix(a, points);
  if (orbit_length(cyc, 0) != points.size())
    throw CertificationFailure("cycle element does not act as a single cycle");
  return a;
}

namespace {

bool generates_sl(const std::vector<Matrix>& gens, const FieldPtr& field, std::uint32_t dim)
{
  const PointEnumeration points(field, dim, EnumerationKind::nonzero_vectors);
  std::vector<Permutation> perms;
  for (const auto& g : gens)
    perms.push_back(perm_from_matrix(g, points));
  BsgsOptions options;
  options.order_bound = sl_order(field->order(), dim);
  return Bsgs::build(perms, options).order() == *options.order_bound;
}

Matrix diagonal_signs(const FieldPtr& field, std::uint32_t dim, std::vector<std::uint32_t> negated)
{
  Matrix d = Matrix::identity(field, dim);
  for (auto i : negated)
    d.at(i, i) = field->neg(field->one());
  return d;
}

Matrix swap_matrix(const FieldPtr& field, std::uint32_t dim, std::uint32_t a, std::uint32_t b)
{
  Matrix m = Matrix::identity(field, dim);
  m.at(a, a) = field->zero();
  m.at(b, b) = field->zero();
  m.at(a, b) = field->one();
  m.at(b, a) = field->one();
  return m;
}

} // namespace

std::string to_string(GeneratorStyle style)
{
  switch (style) {
  case GeneratorStyle::elementary: return "elementary";
  case GeneratorStyle::involution: return "involution";
  case GeneratorStyle::ring: return "ring";
  }
  return "elementary";
}

GeneratorStyle parse_generator_style(const std::string& text)
{
  for (auto s : {GeneratorStyle::elementary, GeneratorStyle::involution, GeneratorStyle::ring})
    if (to_string(s) == text)
      return s;
  throw InvalidArgument("style must be elementary, involution or ring");
}

std::vector<Matrix> base_generating_set(FieldPtr field, std::uint32_t dim, GeneratorStyle style)
{
  if (dim < 2)
    throw InvalidArgument("base_generating_set needs dimension >= 2");
  const std::uint32_t p = field->characteristic();
  std::vector<Matrix> gens;

  if (style == GeneratorStyle::ring) {
    if (dim % 3 != 0)
      throw InvalidArgument("ring style needs a dimension divisible by 3");
    const std::uint32_t s = dim / 3;
    std::vector<Matrix> ring_gens{Matrix::identity(field, s)};
    Matrix shift(field, s), corner(field, s);
    for (std::uint32_t i = 0; i < s; ++i)
      shift.at(i, (i + 1) % s) = field->one();
    corner.at(0, 0) = field->one();
    for (const Matrix& x : {shift, corner})
      if (std::find(ring_gens.begin(), ring_gens.end(), x) == ring_gens.end())
        ring_gens.push_back(x);
    for (std::uint32_t bi = 0; bi < 3; ++bi)
      for (std::uint32_t bj = 0; bj < 3; ++bj) {
        if (bi == bj)
          continue;
        for (const Matrix& x : ring_gens) {
          Matrix a = Matrix::identity(field, dim);
          for (std::uint32_t r = 0; r < s; ++r)
            for (std::uint32_t c = 0; c < s; ++c)
              a.at(bi * s + r, bj * s + c) = x.at(r, c);
          gens.push_back(std::move(a));
        }
      }
  } else if (style == GeneratorStyle::elementary || p == 2) {
    // In characteristic 2 every transvection is an involution, so both styles
    // share this set.
    const FieldElem alpha = field->primitive_element();
    for (std::uint32_t i = 0; i + 1 < dim; ++i) {
      gens.push_back(Matrix::transvection(field, dim, i, i + 1, alpha));
      gens.push_back(Matrix::transvection(field, dim, i + 1, i, alpha));
    }
    if (!generates_sl(gens, field, dim) && alpha != field->one()) {
      for (std::uint32_t i = 0; i + 1 < dim; ++i) {
        gens.push_back(Matrix::transvection(field, dim, i, i + 1, field->one()));
        gens.push_back(Matrix::transvection(field, dim, i + 1, i, field->one()));
      }
    }
  } else {
    if (dim < 3)
      throw InvalidArgument("SL_2(F_q), q odd, has a single involution; no involution generating set");
    for (std::uint32_t k = 0; k + 1 < dim; ++k) {
      const std::uint32_t other = (k + 2) % dim;
      gens.push_back(swap_matrix(field, dim, k, k + 1) * diagonal_signs(field, dim, {other}));
      const Matrix t = Matrix::transvection(field, dim, k, k + 1, field->one());
      gens.push_back(t * diagonal_signs(field, dim, {k, k + 1}) * t.inverse());
    }
    // The set above can land in a proper subgroup (it does for SL_3(F_3)).
    // Conjugating by unit transvections stays inside the involutions and
    // reaches the normal closure, which is all of SL here.
    for (std::size_t round = 0; round < 4 && !generates_sl(gens, field, dim); ++round) {
      const std::vector<Matrix> current = gens;
      for (std::uint32_t i = 0; i < dim && !generates_sl(gens, field, dim); ++i)
        for (std::uint32_t j = 0; j < dim && !generates_sl(gens, field, dim); ++j) {
          if (i == j)
            continue;
          const Matrix t = Matrix::transvection(field, dim, i, j, field->one());
          for (const auto& g : current) {
            const Matrix c = t * g * t.inverse();
            if (std::find(gens.begin(), gens.end(), c) == gens.end()) {
              gens.push_back(c);
              break;
            }
          }
        }
    }
  }

  for (const auto& g : gens)
    if (g.determinant() != field->one())
      throw CertificationFailure("base generator is not in SL");
  if (style == GeneratorStyle::involution)
    for (const auto& g : gens)
      if (!(g * g).is_identity())
        throw CertificationFailure("involution-style generator has order != 2");
  if (!generates_sl(gens, field, dim))
    throw CertificationFailure("base generating set does not generate SL_" + std::to_string(dim) +
                               "(F_" + std::to_string(field->order()) + ")");
  return gens;
}

Matrix conjugate(const Matrix& a, const Matrix& h) { return h.inverse() * a * h; }

Matrix transpose_inverse(const Matrix& a) { return a.inverse().transpose(); }

} // namespace expander
