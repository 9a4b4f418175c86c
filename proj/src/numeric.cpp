#include "schnorr/numeric.hpp"

#include <algorithm>
#include <utility>

#include "schnorr/error.hpp"

namespace schnorr {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInstanceRejected: return "instance-rejected";
    case ErrorCode::kEvenModulus: return "even-modulus";
    case ErrorCode::kPrimeModulus: return "prime-modulus";
    case ErrorCode::kPrimePower: return "prime-power-modulus";
    case ErrorCode::kInvalidOverride: return "invalid-override";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kRankDeficient: return "rank-deficient";
    case ErrorCode::kIterationCap: return "cap-exceeded";
    case ErrorCode::kOracleTooLarge: return "oracle-too-large";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kNotALatticeVector: return "not-a-lattice-vector";
    case ErrorCode::kInternalInconsistency: return "internal-inconsistency";
    case ErrorCode::kFixture: return "fixture";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Integer round_half_away(const Rational& x) {
  Integer num = bmp::numerator(x);
  Integer den = bmp::denominator(x);  // always positive
  bool negative = num < 0;
  if (negative) num = -num;
  // floor((2|num| + den) / (2 den))
  Integer rounded = (2 * num + den) / (2 * den);
  return negative ? Integer(-rounded) : rounded;
}

Integer round_half_away(const Real& x) {
  Real magnitude = bmp::abs(x);
  Real floored = bmp::floor(magnitude + Real(0.5));
  Integer rounded = floored.convert_to<Integer>();
  return x < 0 ? Integer(-rounded) : rounded;
}

Integer isqrt(const Integer& x) {
  if (x < 0) throw Error(ErrorCode::kInvalidArgument, "isqrt of negative");
  return bmp::sqrt(x);
}

bool is_perfect_square(const Integer& x) {
  if (x < 0) return false;
  Integer root = isqrt(x);
  return root * root == x;
}

Integer gcd(const Integer& a, const Integer& b) {
  return bmp::gcd(a, b);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  Integer den = bmp::denominator(x);
  if (den == 1) return bmp::numerator(x).str();
  return bmp::numerator(x).str() + "/" + den.str();
}

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kInvalidArgument, "empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start),
                   text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::kInvalidArgument, "not an integer: " + text);
  }
  return Integer(text);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    return Rational(num, den);
  }
  auto dot_pos = text.find('.');
  if (dot_pos == std::string::npos) return Rational(parse_integer(text));
  std::string digits = text.substr(0, dot_pos) + text.substr(dot_pos + 1);
  Integer scale = bmp::pow(Integer(10),
                           static_cast<unsigned>(text.size() - dot_pos - 1));
  return Rational(parse_integer(digits), scale);
}

std::uint64_t bitstring_index(const Bitstring& bits) {
  std::uint64_t index = 0;
  for (auto b : bits) index = (index << 1) | (b & 1u);
  return index;
}

Bitstring index_bitstring(std::uint64_t index, int n) {
  Bitstring bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[i] = (index >> (n - 1 - i)) & 1u;
  return bits;
}

std::string format_bitstring(const Bitstring& bits) {
  std::string out;
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Bitstring parse_bitstring(const std::string& text) {
  Bitstring bits;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::kInvalidArgument, "not a bitstring: " + text);
    bits.push_back(c == '1');
  }
  return bits;
}

Integer determinant(const IntMatrix& square) {
  if (square.rows() != square.cols())
    throw Error(ErrorCode::kLengthMismatch, "determinant of non-square matrix");
  const Eigen::Index n = square.rows();
  if (n == 0) return 1;
  IntMatrix a = square;
  Integer sign = 1;
  Integer previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace schnorr
