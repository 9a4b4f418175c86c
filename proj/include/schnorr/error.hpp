#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schnorr {

enum class ErrorCode {
  kInstanceRejected,   // N too small for a lattice of dimension >= 2
  kEvenModulus,
  kPrimeModulus,
  kPrimePower,
  kInvalidOverride,    // diagonal override is not the required multiset
  kInvalidArgument,
  kLengthMismatch,
  kRankDeficient,
  kIterationCap,
  kOracleTooLarge,
  kCapacity,
  kNotALatticeVector,
  kInternalInconsistency,
  kFixture,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace schnorr
