#include "schnorr/primes_lattice.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <random>
#include <string>

#include <boost/multiprecision/miller_rabin.hpp>

#include "schnorr/error.hpp"
#include "schnorr/random.hpp"

namespace schnorr {
namespace {

// Largest r with r^k <= x, for x >= 1.
Integer integer_root(const Integer& x, unsigned k) {
  const unsigned bits = static_cast<unsigned>(bmp::msb(x)) + 1;
  Integer lo = 1;
  Integer hi = Integer(1) << (bits / k + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (bmp::pow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Real decimal_real(double value) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value);
  return Real(std::string(buffer.data(), end));
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  std::mt19937 engine(0x5eed);
  return bmp::miller_rabin_test(n, 25, engine);
}

void validate_modulus(const Integer& modulus) {
  if (modulus < 15)
    throw Error(ErrorCode::kInstanceRejected,
                "modulus must be >= 15, got " + to_string(modulus));
  if (bmp::bit_test(modulus, 0) == false)
    throw Error(ErrorCode::kEvenModulus, to_string(modulus) + " is even");
  if (is_probable_prime(modulus))
    throw Error(ErrorCode::kPrimeModulus, to_string(modulus) + " is prime");
  const unsigned bits = static_cast<unsigned>(bmp::msb(modulus)) + 1;
  for (unsigned k = 2; k <= bits; ++k) {
    Integer root = integer_root(modulus, k);
    if (root < 2) break;
    if (bmp::pow(root, k) == modulus && is_probable_prime(root))
      throw Error(ErrorCode::kPrimePower,
                  to_string(modulus) + " = " + to_string(root) + "^" +
                      std::to_string(k));
  }
}

int lattice_dimension(const Integer& modulus, int l) {
  if (l != 1 && l != 2)
    throw Error(ErrorCode::kInvalidArgument, "l must be 1 or 2");
  if (modulus < 15)
    throw Error(ErrorCode::kInstanceRejected, "modulus must be >= 15");
  Real log2_n = bmp::log(Real(modulus)) / bmp::log(Real(2));
  Real ratio = Real(l) * log2_n / (bmp::log(log2_n) / bmp::log(Real(2)));
  int n = bmp::floor(ratio).convert_to<int>();
  if (n < 2)
    throw Error(ErrorCode::kInstanceRejected,
                "lattice dimension " + std::to_string(n) + " < 2 for N=" +
                    to_string(modulus) + ", l=" + std::to_string(l));
  return n;
}

PrimeBasis first_primes(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1 primes");
  PrimeBasis basis;
  basis.primes.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t candidate = 2; basis.size() < n; ++candidate) {
    bool prime = true;
    for (auto p : basis.primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) basis.primes.push_back(candidate);
  }
  return basis;
}

std::vector<int> diagonal_multiset(int n) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  // round(i/2) with ties away from zero is (i + 1) / 2 in integers.
  for (int i = 1; i <= n; ++i) values.push_back((i + 1) / 2);
  return values;
}

std::vector<int> diagonal_permutation(
    int n, std::uint64_t seed, std::uint64_t draw,
    const std::optional<std::vector<int>>& override_values) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  std::vector<int> required = diagonal_multiset(n);
  if (override_values) {
    std::vector<int> sorted = *override_values;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != required)
      throw Error(ErrorCode::kInvalidOverride,
                  "diagonal override is not a permutation of {round(i/2)}");
    return *override_values;
  }
  Rng rng(seed, Stream::kDiagonal, draw);
  rng.shuffle(required);
  return required;
}

Integer scaled_log(const Integer& x, double c) {
  Real scale = bmp::pow(Real(10), decimal_real(c));
  return round_half_away(scale * bmp::log(Real(x)));
}

CvpInstance build_cvp(const Integer& modulus, double c, const PrimeBasis& primes,
                      const std::vector<int>& diagonal) {
  const int n = primes.size();
  if (static_cast<int>(diagonal.size()) != n)
    throw Error(ErrorCode::kLengthMismatch, "diagonal and prime basis differ");
  if (!(c > 0)) throw Error(ErrorCode::kInvalidArgument, "c must be > 0");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "empty prime basis");

  CvpInstance cvp;
  cvp.basis = IntMatrix::Zero(n + 1, n);
  for (int i = 0; i < n; ++i) {
    if (diagonal[i] <= 0)
      throw Error(ErrorCode::kInvalidArgument, "diagonal entries must be > 0");
    cvp.basis(i, i) = diagonal[i];
    cvp.basis(n, i) = scaled_log(Integer(primes.primes[i]), c);
  }
  cvp.target = IntVector::Zero(n + 1);
  cvp.target[n] = scaled_log(modulus, c);
  cvp.diagonal = diagonal;
  cvp.c = c;
  return cvp;
}

int validate_instance(const FactoringInstance& instance) {
  validate_modulus(instance.modulus);
  if (!(instance.c > 0) || !std::isfinite(instance.c))
    throw Error(ErrorCode::kInvalidArgument, "c must be a positive real");
  const int n = lattice_dimension(instance.modulus, instance.l);
  if (instance.smooth_bound < n)
    throw Error(ErrorCode::kInvalidArgument,
                "smooth bound " + std::to_string(instance.smooth_bound) +
                    " is below the lattice dimension " + std::to_string(n));
  if (instance.diagonal_override) {
    if (static_cast<int>(instance.diagonal_override->size()) != n)
      throw Error(ErrorCode::kInvalidOverride,
                  "diagonal override has length " +
                      std::to_string(instance.diagonal_override->size()) +
                      ", lattice dimension is " + std::to_string(n));
    diagonal_permutation(n, instance.seed, 0, instance.diagonal_override);
  }
  return n;
}

}  // namespace schnorr
