#pragma once

#include <stdexcept>
#include <string>

namespace twinchain {

enum class ErrorCode {
  kParse = 1,
  kCycle,
  kIndex,
  kDimensionMismatch,
  kSize,
  kDegenerateInput,
  kOddDimension,
  kUnvalidatedInput,
  kBoundViolation,
  kGoldenMismatch,
  kIo,
  kOverflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define TWINCHAIN_DEFINE_ERROR(Name, Code)                                   \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

TWINCHAIN_DEFINE_ERROR(ParseError, kParse)
TWINCHAIN_DEFINE_ERROR(CycleError, kCycle)
TWINCHAIN_DEFINE_ERROR(IndexError, kIndex)
TWINCHAIN_DEFINE_ERROR(DimensionMismatch, kDimensionMismatch)
TWINCHAIN_DEFINE_ERROR(SizeError, kSize)
TWINCHAIN_DEFINE_ERROR(DegenerateInput, kDegenerateInput)
TWINCHAIN_DEFINE_ERROR(OddDimension, kOddDimension)
TWINCHAIN_DEFINE_ERROR(UnvalidatedInput, kUnvalidatedInput)
TWINCHAIN_DEFINE_ERROR(GoldenMismatch, kGoldenMismatch)
TWINCHAIN_DEFINE_ERROR(IoError, kIo)
TWINCHAIN_DEFINE_ERROR(OverflowError, kOverflow)

#undef TWINCHAIN_DEFINE_ERROR

}  // namespace twinchain
