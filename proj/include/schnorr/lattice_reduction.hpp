#pragma once

// Exact Gram-Schmidt, delta-LLL reduction, Babai's nearest plane and an
// exhaustive CVP oracle.  Lattice vectors are matrix columns throughout.

#include <cstdint>
#include <optional>

#include "schnorr/error.hpp"
#include "schnorr/numeric.hpp"

namespace schnorr {

template <typename Scalar>
struct GramSchmidtData {
  Matrix<Scalar> ortho;     // column i is b~_i
  Matrix<Scalar> mu;        // strictly lower triangular, mu(i, j) for j < i
  Vector<Scalar> norms_sq;  // <b~_i, b~_i>
};

// b~_i = b_i - sum_{j<i} mu_ij b~_j with mu_ij = <b_i, b~_j> / <b~_j, b~_j>.
// Throws kRankDeficient if a column is dependent on the earlier ones.
template <typename Scalar = Rational>
GramSchmidtData<Scalar> gram_schmidt(const Matrix<Scalar>& basis) {
  const Eigen::Index m = basis.rows();
  const Eigen::Index n = basis.cols();
  GramSchmidtData<Scalar> gs{Matrix<Scalar>(m, n), Matrix<Scalar>::Zero(n, n),
                             Vector<Scalar>(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector<Scalar> b = basis.col(i);
    Vector<Scalar> v = b;
    for (Eigen::Index j = 0; j < i; ++j) {
      Vector<Scalar> bj = gs.ortho.col(j);
      gs.mu(i, j) = dot(b, bj) / gs.norms_sq[j];
      v -= gs.mu(i, j) * bj;
    }
    gs.norms_sq[i] = squared_norm(v);
    if (gs.norms_sq[i] == Scalar(0))
      throw Error(ErrorCode::kRankDeficient,
                  "column " + std::to_string(i + 1) +
                      " is linearly dependent on earlier columns");
    gs.ortho.col(i) = v;
  }
  return gs;
}

inline GramSchmidtData<Rational> gram_schmidt(const IntMatrix& basis) {
  return gram_schmidt<Rational>(basis.cast<Rational>().eval());
}

struct ReductionResult {
  IntMatrix reduced;    // = original * transform
  IntMatrix transform;  // unimodular
  Rational delta{3, 4};
  std::uint64_t iterations = 0;
};

inline constexpr std::uint64_t kDefaultIterationCap = 1'000'000;

// delta-LLL reduction: for each k a full size-reduction sweep j = k-1..1,
// then the Lovasz test; on failure swap b_k, b_{k-1} and set k = max(k-1, 2).
// Exact rational arithmetic.  Throws kIterationCap after `iteration_cap`
// passes of the outer loop.
ReductionResult lll_reduce(const IntMatrix& basis, const Rational& delta,
                           std::uint64_t iteration_cap = kDefaultIterationCap);

struct LllViolation {
  enum class Kind { kSizeReduction, kLovasz };
  Kind kind;
  // 1-based indices as in mu_ij; for kLovasz j = i - 1.
  int i;
  int j;
};

struct LllCheck {
  bool reduced = true;
  std::optional<LllViolation> violation;  // first one found, i ascending

  explicit operator bool() const { return reduced; }
};

LllCheck is_lll_reduced(const IntMatrix& basis, const Rational& delta);

// Integer U with original * U = reduced.  Throws kNotALatticeVector if the
// reduced basis is not in the lattice, kInvalidArgument if |det U| != 1.
IntMatrix unimodular_transform(const IntMatrix& original,
                               const IntMatrix& reduced);

// Wraps an externally reduced basis (e.g. from a fixture) as a result.
ReductionResult reduction_from_basis(const IntMatrix& original,
                                     const IntMatrix& reduced,
                                     const Rational& delta);

struct BabaiResult {
  IntVector b_op;
  IntVector coeffs_reduced;
  IntVector coeffs_original;
  IntVector residual;  // t - b_op
  Integer dist_sq;
};

BabaiResult babai_nearest_plane(const ReductionResult& reduction,
                                const IntVector& target);

struct CvpSolution {
  IntVector vector;
  IntVector coeffs;
  Integer dist_sq;
};

// Exhaustive search over coefficients in center + [-bound, bound]^n (center
// defaults to zero); ties go to the lexicographically smallest coefficient
// vector.  Throws kOracleTooLarge if the box has more than 1e8 points.
CvpSolution brute_force_cvp(const IntMatrix& basis, const IntVector& target,
                            int bound, const IntVector& center = IntVector());

}  // namespace schnorr
