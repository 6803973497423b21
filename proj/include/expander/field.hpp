#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace expander {

// Element of a GaloisField, encoded as sum_i c_i p^i over its polynomial
// coefficients c_0..c_{m-1} (little-endian, c_0 is the constant term).
struct FieldElem {
  std::uint32_t code = 0;
  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

// GF(p^m) realized as GF(p)[x]/(modulus) with full operation tables.
//
// The modulus is taken from a fixed table of primitive polynomials, or, for
// (p, m) pairs outside the table, the lexicographically smallest monic
// primitive polynomial. Either way the choice is a pure function of (p, m),
// so element codes and point enumerations are stable across runs.
class GaloisField {
public:
  static constexpr std::uint32_t max_order = 1u << 10;

  // Throws InvalidArgument if p is not prime, or q = p^m exceeds max_order.
  static std::shared_ptr<const GaloisField> make(std::uint32_t p, std::uint32_t m);
  // Explicit modulus (monic, little-endian coefficients, length m+1).
  // Throws InvalidArgument if it is reducible.
  static std::shared_ptr<const GaloisField> make(std::uint32_t p,
                                                 std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  // The class x of the polynomial variable (equal to 0 only when m == 1 and
  // the modulus is x itself; for m == 1 this returns the constant p mod p).
  FieldElem variable() const;
  FieldElem from_int(long long value) const; // image of an integer in the prime field
  FieldElem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept { return {add_[a.code * q_ + b.code]}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept { return {mul_[a.code * q_ + b.code]}; }
  FieldElem neg(FieldElem a) const noexcept { return {neg_[a.code]}; }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }
  // Throws InvalidArgument for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  // Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(FieldElem a) const;
  // First element (by code) whose multiplicative order is q - 1.
  FieldElem primitive_element() const;

  // Coefficient string, c_0 first: "011" is x + x^2 in GF(8). For p > 10
  // coefficients are separated by '.'.
  std::string format(FieldElem a) const;
  FieldElem parse(std::string_view text) const;

  std::string describe() const; // e.g. "GF(2^3) mod 1101"

  friend bool operator==(const GaloisField& a, const GaloisField& b)
  {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

private:
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Brute-force factor search over GF(p): no monic factor of degree 1..m/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);
// Shipped modulus for (p, m) if one exists in the table.
std::vector<std::uint32_t> table_modulus(std::uint32_t p, std::uint32_t m);

} // namespace expander
