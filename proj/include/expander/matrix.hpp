#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "expander/bigint.hpp"
#include "expander/field.hpp"
#include "expander/perm.hpp"

namespace expander {

using FieldPtr = std::shared_ptr<const GaloisField>;

// Square matrix over a GaloisField. Vectors are rows and matrices act on the
// right, v -> v * A, so the action of A * B is "A then B", matching
// Permutation composition.
class Matrix {
public:
  Matrix(FieldPtr field, std::uint32_t dim); // zero matrix
  static Matrix identity(FieldPtr field, std::uint32_t dim);
  // I + alpha * E_{row,col}, row != col.
  static Matrix transvection(FieldPtr field, std::uint32_t dim, std::uint32_t row,
                             std::uint32_t col, FieldElem alpha);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  FieldElem at(std::uint32_t r, std::uint32_t c) const { return entries_[r * dim_ + c]; }
  FieldElem& at(std::uint32_t r, std::uint32_t c) { return entries_[r * dim_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Matrix transpose() const;
  FieldElem determinant() const;
  // Throws InvalidArgument when singular.
  Matrix inverse() const;
  Matrix power(std::uint64_t e) const;
  bool is_identity() const;
  std::vector<FieldElem> apply_row(const std::vector<FieldElem>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b)
  {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  FieldPtr field_;
  std::uint32_t dim_;
  std::vector<FieldElem> entries_;
};

// Rows separated by '\n', entries by ' ', each entry a coefficient string.
std::string to_string(const Matrix& a);
Matrix parse_matrix(FieldPtr field, std::string_view text);

// |SL_dim(F_q)| = q^(dim(dim-1)/2) * prod_{i=2..dim} (q^i - 1).
BigInt sl_order(std::uint32_t q, std::uint32_t dim);

enum class EnumerationKind { nonzero_vectors, projective_plane };

// Fixed indexing of the points a matrix group acts on.
//   nonzero_vectors: F_q^dim \ {0}, lexicographic by coordinate codes.
//   projective_plane: normalized representatives (first nonzero coordinate
//                     is 1) of the points of P^2(F_q), lexicographic.
class PointEnumeration {
public:
  PointEnumeration(FieldPtr field, std::uint32_t dim, EnumerationKind kind);

  EnumerationKind kind() const noexcept { return kind_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(points_.size()); }
  const std::vector<FieldElem>& point(std::uint32_t index) const { return points_.at(index); }
  // Index of a nonzero vector (normalized first for the projective kind).
  std::uint32_t index_of(const std::vector<FieldElem>& v) const;

private:
  std::uint64_t code(const std::vector<FieldElem>& v) const;

  FieldPtr field_;
  std::uint32_t dim_;
  EnumerationKind kind_;
  std::vector<std::vector<FieldElem>> points_;
  std::vector<std::uint32_t> index_; // by vector code; UINT32_MAX when absent
};

// Permutation induced by v -> v * M on the enumerated points. For the
// nonzero-vector kind the image is required to be even; an odd image throws
// CertificationFailure.
Permutation perm_from_matrix(const Matrix& m, const PointEnumeration& points);

// Matrix over GF(p) of multiplication by a power of a primitive element of
// `extension` = GF(p^m), in the basis 1, x, ..., x^(m-1): a companion-matrix
// form. For the nonzero-vector kind (p must be 2) it is a single cycle on all
// p^m - 1 vectors; for the projective kind (m = 3) the element alpha^(p-1) is
// used, which has determinant 1 and cycles the p^2+p+1 points.
Matrix k_cycle_element(const GaloisField& extension, const PointEnumeration& points);

// ring: SL_{3s}(F_q) read as SL_3 over the matrix ring M_s(F_q), generated
// by block elementary matrices I + E_IJ(x), x in {1, cyclic shift, E_11}.
// Needs dim divisible by 3; the set size does not depend on s.
enum class GeneratorStyle { elementary, involution, ring };

std::string to_string(GeneratorStyle style);
GeneratorStyle parse_generator_style(const std::string& text);

// Small generating set of SL_dim(F_q), certified by comparing the BSGS order
// of its action on nonzero vectors with sl_order. Throws
// CertificationFailure if the certificate fails and InvalidArgument if the
// style has no construction for (q, dim).
std::vector<Matrix> base_generating_set(FieldPtr field, std::uint32_t dim, GeneratorStyle style);

// Automorphisms used to twist generators: conjugation by h and the graph
// automorphism A -> (A^-1)^T.
Matrix conjugate(const Matrix& a, const Matrix& h);
Matrix transpose_inverse(const Matrix& a);

} // namespace expander
