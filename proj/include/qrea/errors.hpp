#pragma once

#include <stdexcept>
#include <string>

namespace qrea {

// Error hierarchy. Every contract violation raised by the library derives
// from qrea::Error so callers (the CLI in particular) can map them to exit
// codes without catching unrelated std exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define QREA_DEFINE_ERROR(Name)              \
  struct Name : Error {                      \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

QREA_DEFINE_ERROR(ZeroDenominator);
QREA_DEFINE_ERROR(PoleAtPoint);
QREA_DEFINE_ERROR(SizeMismatch);
QREA_DEFINE_ERROR(PositionOutOfRange);
QREA_DEFINE_ERROR(DegreeOutOfRange);
QREA_DEFINE_ERROR(NonOrientable);
QREA_DEFINE_ERROR(SingularConvolutionSystem);
QREA_DEFINE_ERROR(IllFormedInstance);
QREA_DEFINE_ERROR(BidegreeExceeded);
QREA_DEFINE_ERROR(FlatnessCheckFailed);
QREA_DEFINE_ERROR(SignMismatch);
QREA_DEFINE_ERROR(NotTriangular);
QREA_DEFINE_ERROR(InconsistentPivots);
QREA_DEFINE_ERROR(IllConditioned);
QREA_DEFINE_ERROR(ParseError);

#undef QREA_DEFINE_ERROR

}  // namespace qrea
