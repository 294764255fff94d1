#pragma once

#include <stdexcept>
#include <string>

namespace dirac1d {

// Base of every numerical failure raised by the library. Callers that only
// care about "something went wrong numerically" catch this.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DIRAC1D_DEFINE_ERROR(Name)            \
  class Name : public NumericalError {        \
   public:                                    \
    using NumericalError::NumericalError;     \
  }

DIRAC1D_DEFINE_ERROR(InvalidPole);      // Kummer b parameter at a pole
DIRAC1D_DEFINE_ERROR(NoConvergence);    // series term cap reached
DIRAC1D_DEFINE_ERROR(ScanFailure);      // non-finite sample in a sign scan
DIRAC1D_DEFINE_ERROR(MaxIterations);    // root refinement did not settle
DIRAC1D_DEFINE_ERROR(NotAnEigenvalue);  // residual too large for assembly
DIRAC1D_DEFINE_ERROR(DegenerateMatch);  // both matching denominators vanish
DIRAC1D_DEFINE_ERROR(TailTruncation);   // grid does not cover the decay
DIRAC1D_DEFINE_ERROR(Overflow);         // shooting state lost finiteness

#undef DIRAC1D_DEFINE_ERROR

}  // namespace dirac1d
