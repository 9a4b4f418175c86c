#include "schnorr/lattice_reduction.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace schnorr {
namespace {

const Rational kHalf{1, 2};

void require_delta(const Rational& delta) {
  if (!(delta > Rational(1, 4) && delta <= 1))
    throw Error(ErrorCode::kInvalidArgument,
                "delta must lie in (1/4, 1], got " + to_string(delta));
}

// Solves the square system a x = b (columns of b) in exact rationals.
// Returns nullopt if a is singular.
std::optional<RatMatrix> solve_exact(RatMatrix a, RatMatrix b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      b.row(col).swap(b.row(pivot));
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational factor = a(r, col) / a(col, col);
      a.row(r) -= factor * a.row(col);
      b.row(r) -= factor * b.row(col);
    }
  }
  for (Eigen::Index r = 0; r < n; ++r) b.row(r) /= a(r, r);
  return b;
}

}  // namespace

ReductionResult lll_reduce(const IntMatrix& basis, const Rational& delta,
                           std::uint64_t iteration_cap) {
  require_delta(delta);
  const Eigen::Index n = basis.cols();
  ReductionResult result;
  result.reduced = basis;
  result.transform = IntMatrix::Identity(n, n);
  result.delta = delta;
  if (n == 0) return result;

  GramSchmidtData<Rational> gs = gram_schmidt(basis);
  RatMatrix& mu = gs.mu;
  RatVector& norms = gs.norms_sq;
  IntMatrix& b = result.reduced;
  IntMatrix& u = result.transform;

  // 0-based k; the printed algorithm's k = 2 is index 1 here.
  Eigen::Index k = 1;
  while (k < n) {
    if (++result.iterations > iteration_cap)
      throw Error(ErrorCode::kIterationCap,
                  "LLL exceeded " + std::to_string(iteration_cap) +
                      " iterations");
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      if (bmp::abs(mu(k, j)) <= kHalf) continue;
      const Integer q = round_half_away(mu(k, j));
      b.col(k) -= q * b.col(j);
      u.col(k) -= q * u.col(j);
      const Rational qr(q);
      for (Eigen::Index l = 0; l < j; ++l) mu(k, l) -= qr * mu(j, l);
      mu(k, j) -= qr;
    }

    const Rational m = mu(k, k - 1);
    if (norms[k] >= (delta - m * m) * norms[k - 1]) {
      ++k;
      continue;
    }

    b.col(k).swap(b.col(k - 1));
    u.col(k).swap(u.col(k - 1));
    const Rational new_prev = norms[k] + m * m * norms[k - 1];
    const Rational new_mu = m * norms[k - 1] / new_prev;
    norms[k] = norms[k - 1] * norms[k] / new_prev;
    norms[k - 1] = new_prev;
    mu(k, k - 1) = new_mu;
    for (Eigen::Index l = 0; l + 1 < k; ++l) std::swap(mu(k - 1, l), mu(k, l));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Rational t = mu(i, k);
      mu(i, k) = mu(i, k - 1) - m * t;
      mu(i, k - 1) = t + new_mu * mu(i, k);
    }
    k = std::max<Eigen::Index>(k - 1, 1);
  }
  return result;
}

LllCheck is_lll_reduced(const IntMatrix& basis, const Rational& delta) {
  LllCheck check;
  if (basis.cols() <= 1) return check;
  const GramSchmidtData<Rational> gs = gram_schmidt(basis);
  for (Eigen::Index i = 1; i < basis.cols(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (bmp::abs(gs.mu(i, j)) > kHalf) {
        check.reduced = false;
        check.violation = LllViolation{LllViolation::Kind::kSizeReduction,
                                       static_cast<int>(i + 1),
                                       static_cast<int>(j + 1)};
        return check;
      }
    }
    const Rational m = gs.mu(i, i - 1);
    // ||b~_i + mu b~_{i-1}||^2 = N_i + mu^2 N_{i-1}
    if (gs.norms_sq[i] + m * m * gs.norms_sq[i - 1] <
        delta * gs.norms_sq[i - 1]) {
      check.reduced = false;
      check.violation = LllViolation{LllViolation::Kind::kLovasz,
                                     static_cast<int>(i + 1),
                                     static_cast<int>(i)};
      return check;
    }
  }
  return check;
}

IntMatrix unimodular_transform(const IntMatrix& original,
                               const IntMatrix& reduced) {
  if (original.rows() != reduced.rows() || original.cols() != reduced.cols())
    throw Error(ErrorCode::kLengthMismatch, "basis shapes differ");
  const RatMatrix o = original.cast<Rational>();
  const RatMatrix r = reduced.cast<Rational>();
  RatMatrix gram = o.transpose() * o;
  RatMatrix rhs = o.transpose() * r;
  auto solved = solve_exact(gram, rhs);
  if (!solved) throw Error(ErrorCode::kRankDeficient, "original basis");

  IntMatrix u(solved->rows(), solved->cols());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const Rational& x = (*solved)(i, j);
      if (bmp::denominator(x) != 1)
        throw Error(ErrorCode::kNotALatticeVector,
                    "reduced column " + std::to_string(j + 1) +
                        " has non-integral coordinates");
      u(i, j) = bmp::numerator(x);
    }
  }
  if (IntMatrix(original * u) != reduced)
    throw Error(ErrorCode::kNotALatticeVector,
                "reduced basis is outside the original lattice");
  if (bmp::abs(determinant(u)) != 1)
    throw Error(ErrorCode::kInvalidArgument,
                "reduced basis spans a proper sublattice (|det U| != 1)");
  return u;
}

ReductionResult reduction_from_basis(const IntMatrix& original,
                                     const IntMatrix& reduced,
                                     const Rational& delta) {
  require_delta(delta);
  ReductionResult result;
  result.transform = unimodular_transform(original, reduced);
  result.reduced = reduced;
  result.delta = delta;
  return result;
}

BabaiResult babai_nearest_plane(const ReductionResult& reduction,
                                const IntVector& target) {
  const IntMatrix& basis = reduction.reduced;
  if (basis.cols() == 0)
    throw Error(ErrorCode::kInvalidArgument, "empty basis");
  if (target.size() != basis.rows())
    throw Error(ErrorCode::kLengthMismatch,
                "target length " + std::to_string(target.size()) +
                    " != ambient dimension " + std::to_string(basis.rows()));

  const GramSchmidtData<Rational> gs = gram_schmidt(basis);
  const Eigen::Index n = basis.cols();
  IntVector remaining = target;
  BabaiResult result;
  result.coeffs_reduced = IntVector::Zero(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    const RatVector ortho = gs.ortho.col(i);
    const RatVector rem = remaining.cast<Rational>();
    const Integer c = round_half_away(dot(rem, ortho) / gs.norms_sq[i]);
    result.coeffs_reduced[i] = c;
    remaining -= c * basis.col(i);
  }
  result.residual = remaining;
  result.b_op = target - remaining;
  result.dist_sq = squared_norm(remaining);
  result.coeffs_original = reduction.transform * result.coeffs_reduced;
  return result;
}

CvpSolution brute_force_cvp(const IntMatrix& basis, const IntVector& target,
                            int bound, const IntVector& center) {
  if (bound < 0) throw Error(ErrorCode::kInvalidArgument, "negative bound");
  if (target.size() != basis.rows())
    throw Error(ErrorCode::kLengthMismatch, "target length");
  const Eigen::Index n = basis.cols();
  const double side = 2.0 * bound + 1.0;
  double points = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) points *= side;
  if (points > 1e8)
    throw Error(ErrorCode::kOracleTooLarge,
                "search box has " + std::to_string(points) + " points");
  if (center.size() != 0 && center.size() != n)
    throw Error(ErrorCode::kLengthMismatch, "center length");
  const IntVector origin = center.size() == 0 ? IntVector::Zero(n) : center;

  // Odometer over coefficients in lexicographic order, first coordinate
  // most significant; a strict improvement test keeps the smallest.
  IntVector coeffs = origin - IntVector::Constant(n, Integer(bound));
  IntVector point = basis * coeffs;
  CvpSolution best{point, coeffs, squared_norm(IntVector(target - point))};
  while (true) {
    Eigen::Index digit = n - 1;
    while (digit >= 0 && coeffs[digit] == origin[digit] + bound) {
      coeffs[digit] = origin[digit] - bound;
      point -= Integer(2 * bound) * basis.col(digit);
      --digit;
    }
    if (digit < 0) break;
    coeffs[digit] += 1;
    point += basis.col(digit);
    Integer d = squared_norm(IntVector(target - point));
    if (d < best.dist_sq) best = CvpSolution{point, coeffs, std::move(d)};
  }
  return best;
}

}  // namespace schnorr
