#pragma once

#include <stdexcept>
#include <string>

namespace qspec {

/// Root of every error raised by the library. The CLI maps these to exit code 2
/// (usage / precondition) or 1 (verification failure) without printing traces.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define QSPEC_DEFINE_ERROR(Name)                                               \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

QSPEC_DEFINE_ERROR(DisconnectedInput);
QSPEC_DEFINE_ERROR(NotStronglyConnected);
QSPEC_DEFINE_ERROR(DimensionMismatch);
QSPEC_DEFINE_ERROR(ConvergenceFailure);
QSPEC_DEFINE_ERROR(NotNonnegative);
QSPEC_DEFINE_ERROR(NotIrreducible);
QSPEC_DEFINE_ERROR(NotSymmetric);
QSPEC_DEFINE_ERROR(NotEquitable);
QSPEC_DEFINE_ERROR(ZeroPolynomial);
QSPEC_DEFINE_ERROR(InvalidParameters);
QSPEC_DEFINE_ERROR(UnsupportedFamily);
QSPEC_DEFINE_ERROR(UnknownClaim);
QSPEC_DEFINE_ERROR(BudgetExceeded);
QSPEC_DEFINE_ERROR(CompleteInput);
QSPEC_DEFINE_ERROR(ParseError);

#undef QSPEC_DEFINE_ERROR

} // namespace qspec
