#pragma once

// Scalar and dense container types shared by every module.
//
// All lattice arithmetic is exact: integers are arbitrary precision and
// Gram-Schmidt data lives in exact rationals.  Containers are plain Eigen
// dense types over Boost.Multiprecision GMP scalars with expression
// templates disabled, so Eigen expressions compose with them directly.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace schnorr {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
// 60 significant decimal digits.
using Real = bmp::number<bmp::cpp_dec_float<60>, bmp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

// A selection of basis offsets; element i is x_{i+1}.
using Bitstring = std::vector<std::uint8_t>;

// Nearest integer, ties away from zero.
Integer round_half_away(const Rational& x);
Integer round_half_away(const Real& x);

// Floor of the integer square root; exact for any nonnegative input.
Integer isqrt(const Integer& x);
bool is_perfect_square(const Integer& x);

Integer gcd(const Integer& a, const Integer& b);

// Decimal formatting of big integers and rationals ("a/b").
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
Integer parse_integer(const std::string& text);
// Accepts "a/b", "a", or a decimal like "0.75".
Rational parse_rational(const std::string& text);

// Index convention for bitstrings: x_1 is the most significant bit.
std::uint64_t bitstring_index(const Bitstring& bits);
Bitstring index_bitstring(std::uint64_t index, int n);
std::string format_bitstring(const Bitstring& bits);
Bitstring parse_bitstring(const std::string& text);

template <typename Scalar>
Scalar dot(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

template <typename Scalar>
Scalar squared_norm(const Vector<Scalar>& a) {
  return dot(a, a);
}

// Determinant by fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& square);

}  // namespace schnorr
