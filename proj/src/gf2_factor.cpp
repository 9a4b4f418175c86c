#include "schnorr/gf2_factor.hpp"

#include <utility>

#include "schnorr/error.hpp"

namespace schnorr {
namespace {

int parity(const Integer& x) { return bmp::abs(x) % 2 == 0 ? 0 : 1; }

}  // namespace

Gf2Matrix build_system(const std::vector<SmoothRelation>& relations,
                       const PrimeBasis& smooth_primes) {
  const auto rows = static_cast<Eigen::Index>(smooth_primes.size()) + 1;
  Gf2Matrix m = Gf2Matrix::Zero(rows, static_cast<Eigen::Index>(relations.size()));
  for (std::size_t j = 0; j < relations.size(); ++j) {
    const auto& r = relations[j];
    if (r.residue_exponents.size() != rows)
      throw Error(ErrorCode::kLengthMismatch, "residue exponents do not match the smooth primes");
    if (r.pair.exponents.size() > smooth_primes.size())
      throw Error(ErrorCode::kLengthMismatch, "lattice primes exceed the smooth primes");
    const auto col = static_cast<Eigen::Index>(j);
    m(0, col) = static_cast<std::uint8_t>(parity(r.residue_exponents[0]));
    for (Eigen::Index i = 1; i < rows; ++i) {
      Integer total = r.residue_exponents[i];
      if (i - 1 < r.pair.exponents.size() && r.pair.exponents[i - 1] > 0)
        total += r.pair.exponents[i - 1];
      m(i, col) = static_cast<std::uint8_t>(parity(total));
    }
  }
  return m;
}

std::vector<Gf2Vector> nullspace_gf2(const Gf2Matrix& matrix) {
  Gf2Matrix a = matrix;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_row_of(static_cast<std::size_t>(cols), -1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = 0; r < rows; ++r)
      if (r != rank && a(r, c))
        for (Eigen::Index k = 0; k < cols; ++k) a(r, k) ^= a(rank, k);
    pivot_row_of[static_cast<std::size_t>(c)] = rank++;
  }

  std::vector<Gf2Vector> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (pivot_row_of[static_cast<std::size_t>(free)] >= 0) continue;
    Gf2Vector t(static_cast<std::size_t>(cols), 0);
    t[static_cast<std::size_t>(free)] = 1;
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto r = pivot_row_of[static_cast<std::size_t>(c)];
      if (r >= 0 && a(r, free)) t[static_cast<std::size_t>(c)] = 1;
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

Gf2Vector multiply_gf2(const Gf2Matrix& matrix, const Gf2Vector& t) {
  if (static_cast<Eigen::Index>(t.size()) != matrix.cols())
    throw Error(ErrorCode::kLengthMismatch, "GF(2) vector length");
  Gf2Vector out(static_cast<std::size_t>(matrix.rows()), 0);
  for (Eigen::Index r = 0; r < matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < matrix.cols(); ++c)
      out[static_cast<std::size_t>(r)] ^= matrix(r, c) & t[static_cast<std::size_t>(c)];
  return out;
}

const char* factor_status_name(FactorStatus status) {
  switch (status) {
    case FactorStatus::kFound: return "found";
    case FactorStatus::kAllTrivial: return "all-trivial";
    case FactorStatus::kNoSolution: return "no-solution";
  }
  return "unknown";
}

FactorResult extract_factors(const Gf2Vector& selection,
                             const std::vector<SmoothRelation>& relations,
                             const Integer& modulus) {
  if (selection.size() != relations.size())
    throw Error(ErrorCode::kLengthMismatch, "selection and relation counts differ");
  Congruence cert{{}, 1, 1, 0};
  for (std::size_t j = 0; j < relations.size(); ++j) {
    if (!selection[j]) continue;
    const auto& pair = relations[j].pair;
    cert.subset.push_back(static_cast<int>(j));
    cert.U *= pair.u;
    cert.W *= pair.u - pair.v * modulus;
  }
  if (cert.subset.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty relation subset");
  const Integer product = cert.U * cert.W;
  if (product < 0 || !is_perfect_square(product))
    throw Error(ErrorCode::kInternalInconsistency,
                "U*W = " + to_string(product) + " is not a perfect square");
  cert.Z = isqrt(product);

  FactorResult result;
  result.status = FactorStatus::kAllTrivial;
  result.certificate = cert;
  for (const Integer& candidate : {cert.U - cert.Z, cert.U + cert.Z}) {
    Integer reduced = candidate % modulus;
    if (reduced < 0) reduced += modulus;
    const Integer g = gcd(reduced, modulus);
    if (g > 1 && g < modulus) {
      Integer p = g, q = modulus / g;
      if (p > q) std::swap(p, q);
      if (p * q != modulus)
        throw Error(ErrorCode::kInternalInconsistency, "factor check failed");
      result.status = FactorStatus::kFound;
      result.factors = std::make_pair(p, q);
      break;
    }
  }
  return result;
}

FactorResult factor_from_relations(const std::vector<SmoothRelation>& relations,
                                   const Integer& modulus, const PrimeBasis& smooth_primes) {
  FactorResult result;
  if (relations.empty()) return result;
  const auto system = build_system(relations, smooth_primes);
  const auto kernel = nullspace_gf2(system);
  if (kernel.empty()) return result;
  result.status = FactorStatus::kAllTrivial;
  for (const auto& t : kernel) {
    auto attempt = extract_factors(t, relations, modulus);
    if (attempt.status == FactorStatus::kFound) return attempt;
    if (!result.certificate) result.certificate = attempt.certificate;
  }
  return result;
}

}  // namespace schnorr
