#ifndef SLPFACTOR_ERRORS_HPP
#define SLPFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slpfactor {

// Base for all library failures. `code()` is a stable machine-readable name
// used by the CLI for error reporting and exit status selection.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SLPFACTOR_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& detail = "")                 \
            : Error(#Name, detail) {}                                 \
    }

SLPFACTOR_DEFINE_ERROR(NotDefinedAtZero);
SLPFACTOR_DEFINE_ERROR(DivisionByZero);
SLPFACTOR_DEFINE_ERROR(InexactDivision);
SLPFACTOR_DEFINE_ERROR(Singular);
SLPFACTOR_DEFINE_ERROR(Inconsistent);
SLPFACTOR_DEFINE_ERROR(NotAUnit);
SLPFACTOR_DEFINE_ERROR(ArityMismatch);
SLPFACTOR_DEFINE_ERROR(ZeroPolynomial);
SLPFACTOR_DEFINE_ERROR(DivisorVanishesAtPoint);
SLPFACTOR_DEFINE_ERROR(NoValidOrder);
SLPFACTOR_DEFINE_ERROR(NotFound);
SLPFACTOR_DEFINE_ERROR(SingularPoint);
SLPFACTOR_DEFINE_ERROR(PerturbationDegenerate);
SLPFACTOR_DEFINE_ERROR(PartNotDefinedAtZero);
SLPFACTOR_DEFINE_ERROR(InsufficientPrecision);
SLPFACTOR_DEFINE_ERROR(NotCoprime);
SLPFACTOR_DEFINE_ERROR(SpecializationMismatch);
SLPFACTOR_DEFINE_ERROR(OrderExhausted);
SLPFACTOR_DEFINE_ERROR(NotAPerfectPower);
SLPFACTOR_DEFINE_ERROR(WitnessInvalid);
SLPFACTOR_DEFINE_ERROR(InvalidFace);
SLPFACTOR_DEFINE_ERROR(ParseError);

#undef SLPFACTOR_DEFINE_ERROR

} // namespace slpfactor

#endif
