#include "schnorr/relations.hpp"

#include <set>
#include <string>
#include <utility>

#include "schnorr/error.hpp"

namespace schnorr {

Integer SmoothRelation::residue(const PrimeBasis& smooth_primes) const {
  if (residue_exponents.size() != smooth_primes.size() + 1)
    throw Error(ErrorCode::kLengthMismatch, "residue exponent length");
  Integer value = residue_exponents[0] % 2 == 0 ? 1 : -1;
  for (int i = 0; i < smooth_primes.size(); ++i)
    value *= bmp::pow(Integer(smooth_primes.primes[i]),
                      residue_exponents[i + 1].convert_to<unsigned>());
  return value;
}

IntVector extract_exponents(const IntVector& vector, const std::vector<int>& diagonal) {
  const auto n = static_cast<Eigen::Index>(diagonal.size());
  if (vector.size() != n + 1)
    throw Error(ErrorCode::kLengthMismatch,
                "lattice vector of length " + std::to_string(vector.size()) +
                    " for diagonal of length " + std::to_string(n));
  IntVector e(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Integer f = diagonal[static_cast<std::size_t>(i)];
    if (f == 0 || vector[i] % f != 0)
      throw Error(ErrorCode::kNotALatticeVector,
                  "entry " + std::to_string(i + 1) + " = " + to_string(vector[i]) +
                      " is not divisible by " + to_string(f));
    e[i] = vector[i] / f;
  }
  return e;
}

UvPair vector_to_uv(const IntVector& exponents, const PrimeBasis& primes) {
  if (exponents.size() != primes.size())
    throw Error(ErrorCode::kLengthMismatch, "exponent vector and prime basis");
  UvPair pair{1, 1, exponents};
  for (int i = 0; i < primes.size(); ++i) {
    const Integer& e = exponents[i];
    if (e == 0) continue;
    const Integer p = Integer(primes.primes[i]);
    if (e > 0)
      pair.u *= bmp::pow(p, e.convert_to<unsigned>());
    else
      pair.v *= bmp::pow(p, Integer(-e).convert_to<unsigned>());
  }
  return pair;
}

std::optional<IntVector> smooth_factor(const Integer& m, const PrimeBasis& primes) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "smooth_factor needs m >= 1");
  IntVector e = IntVector::Zero(primes.size());
  Integer rest = m;
  for (int i = 0; i < primes.size() && rest > 1; ++i) {
    const Integer p = Integer(primes.primes[i]);
    while (rest % p == 0) {
      rest /= p;
      e[i] += 1;
    }
  }
  if (rest != 1) return std::nullopt;
  return e;
}

std::optional<SmoothRelation> check_sr_pair(const UvPair& pair, const Integer& modulus,
                                            const PrimeBasis& smooth_primes) {
  if (pair.u < 1 || pair.v < 1)
    throw Error(ErrorCode::kInvalidArgument, "u and v must be positive");
  const Integer residue = pair.u - pair.v * modulus;
  if (residue == 0) return std::nullopt;
  auto factored = smooth_factor(bmp::abs(residue), smooth_primes);
  if (!factored) return std::nullopt;
  SmoothRelation relation{pair, IntVector(smooth_primes.size() + 1)};
  relation.residue_exponents[0] = residue < 0 ? 1 : 0;
  relation.residue_exponents.tail(smooth_primes.size()) = *factored;
  return relation;
}

std::vector<Bitstring> all_selections(int n) {
  std::vector<Bitstring> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
    out.push_back(index_bitstring(i, n));
  return out;
}

CandidateSet collect_candidates(const CvpInstance& cvp, const ReductionResult& reduction,
                                const BabaiResult& babai,
                                const std::vector<Bitstring>& selections,
                                const PrimeBasis& lattice_primes, const Integer& modulus,
                                const PrimeBasis& smooth_primes) {
  if (selections.empty())
    throw Error(ErrorCode::kInvalidArgument, "no selections to test");
  const Eigen::Index n = reduction.reduced.cols();
  CandidateSet out;
  std::set<std::pair<Integer, Integer>> seen;
  for (const auto& x : selections) {
    if (static_cast<Eigen::Index>(x.size()) != n)
      throw Error(ErrorCode::kLengthMismatch, "selection length");
    IntVector offset = babai.coeffs_reduced;
    for (Eigen::Index i = 0; i < n; ++i) offset[i] += x[static_cast<std::size_t>(i)];
    Candidate candidate;
    candidate.selection = x;
    candidate.vector = reduction.reduced * offset;
    candidate.coeffs = reduction.transform * offset;

    IntVector exponents;
    try {
      exponents = extract_exponents(candidate.vector, cvp.diagonal);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInternalInconsistency,
                  std::string("candidate is off the lattice: ") + e.what());
    }
    if (exponents != candidate.coeffs ||
        IntVector(cvp.basis * candidate.coeffs) != candidate.vector)
      throw Error(ErrorCode::kInternalInconsistency,
                  "transform and diagonal give different exponents for selection " +
                      format_bitstring(x));

    candidate.pair = vector_to_uv(exponents, lattice_primes);
    if (!seen.emplace(candidate.pair.u, candidate.pair.v).second) continue;
    candidate.residue = candidate.pair.u - candidate.pair.v * modulus;
    candidate.relation = check_sr_pair(candidate.pair, modulus, smooth_primes);
    if (candidate.relation) out.relations.push_back(*candidate.relation);
    out.candidates.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace schnorr
