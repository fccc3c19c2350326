#ifndef WREP_ERRORS_HPP
#define WREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wrep {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WREP_ERROR_TYPE(Name)                                          \
  struct Name : Error {                                                \
    explicit Name(const std::string& what = #Name) : Error(what) {}    \
  }

WREP_ERROR_TYPE(DivisionByZero);
WREP_ERROR_TYPE(NonUnitDivisor);
WREP_ERROR_TYPE(UnassignedVariable);
WREP_ERROR_TYPE(ZeroAssignedToInvertedVariable);
WREP_ERROR_TYPE(ExponentOverflow);
WREP_ERROR_TYPE(BadDegree);
WREP_ERROR_TYPE(RingMismatch);
WREP_ERROR_TYPE(ShapeMismatch);
WREP_ERROR_TYPE(NotSquare);
WREP_ERROR_TYPE(Singular);
WREP_ERROR_TYPE(NonUnitDeterminant);
WREP_ERROR_TYPE(SymbolicInput);
WREP_ERROR_TYPE(BadStrandCount);
WREP_ERROR_TYPE(StrandMismatch);
WREP_ERROR_TYPE(IndexOutOfRange);
WREP_ERROR_TYPE(WordSyntaxError);
WREP_ERROR_TYPE(WordLengthLimit);
WREP_ERROR_TYPE(BadParams);
WREP_ERROR_TYPE(MissingAlphaImages);
WREP_ERROR_TYPE(NotInvolution);
WREP_ERROR_TYPE(NoWitnessFound);
WREP_ERROR_TYPE(ImageNotIdentity);
WREP_ERROR_TYPE(NotAnExtension);
WREP_ERROR_TYPE(OutOfClassifiedRange);
WREP_ERROR_TYPE(Indeterminate);
WREP_ERROR_TYPE(ParseError);

#undef WREP_ERROR_TYPE

}  // namespace wrep

#endif
