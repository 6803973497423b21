#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace expander {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(std::uint32_t n)
{
  BigInt result = 1;
  for (std::uint32_t k = 2; k <= n; ++k)
    result *= k;
  return result;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

} // namespace expander
