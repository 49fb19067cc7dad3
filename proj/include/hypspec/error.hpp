#pragma once

#include <stdexcept>
#include <string>

namespace hypspec {

/// Coarse classification used by the CLI to pick an exit code.
enum class ErrorClass { Usage, Domain, Numerical };

class Error : public std::runtime_error {
public:
    Error(std::string kind, ErrorClass cls, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)), cls_(cls) {}

    const std::string& kind() const noexcept { return kind_; }
    ErrorClass error_class() const noexcept { return cls_; }

private:
    std::string kind_;
    ErrorClass cls_;
};

#define HYPSPEC_DEFINE_ERROR(Name, Cls)                                              \
    class Name : public Error {                                                      \
    public:                                                                          \
        explicit Name(const std::string& what) : Error(#Name, ErrorClass::Cls, what) {} \
    };

HYPSPEC_DEFINE_ERROR(DomainError, Domain)
HYPSPEC_DEFINE_ERROR(UnknownConstant, Domain)
HYPSPEC_DEFINE_ERROR(NotImplemented, Domain)
HYPSPEC_DEFINE_ERROR(PoleOfGamma, Domain)
HYPSPEC_DEFINE_ERROR(BranchPoint, Domain)
HYPSPEC_DEFINE_ERROR(CombinatorialBlowup, Domain)
HYPSPEC_DEFINE_ERROR(ParseError, Usage)
HYPSPEC_DEFINE_ERROR(NoConvergence, Numerical)
HYPSPEC_DEFINE_ERROR(DegenerateFit, Numerical)
HYPSPEC_DEFINE_ERROR(ResonanceDetected, Numerical)
HYPSPEC_DEFINE_ERROR(AssemblyMismatch, Numerical)
HYPSPEC_DEFINE_ERROR(TailBoundExceeded, Numerical)
HYPSPEC_DEFINE_ERROR(StiffIntegration, Numerical)
HYPSPEC_DEFINE_ERROR(FitFailure, Numerical)

#undef HYPSPEC_DEFINE_ERROR

inline int exit_code(ErrorClass cls) {
    switch (cls) {
    case ErrorClass::Usage: return 2;
    case ErrorClass::Domain: return 3;
    case ErrorClass::Numerical: return 4;
    }
    return 1;
}

} // namespace hypspec
