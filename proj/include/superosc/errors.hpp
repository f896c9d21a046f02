#pragma once

#include <stdexcept>
#include <string>

namespace superosc {

// Base for all domain errors. kind() is the stable variant name surfaced by
// the CLI ("SingularMatrix", "QuadratureFailure", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SUPEROSC_DEFINE_ERROR(NAME)                                  \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& message)                    \
            : Error(#NAME, message) {}                               \
    }

SUPEROSC_DEFINE_ERROR(CapExceeded);
SUPEROSC_DEFINE_ERROR(QuadratureFailure);
SUPEROSC_DEFINE_ERROR(InvalidSpec);
SUPEROSC_DEFINE_ERROR(NotUniform);
SUPEROSC_DEFINE_ERROR(SingularMatrix);
SUPEROSC_DEFINE_ERROR(ResidualNotMet);
SUPEROSC_DEFINE_ERROR(UnknownBasis);
SUPEROSC_DEFINE_ERROR(BandViolation);
SUPEROSC_DEFINE_ERROR(StepTooLarge);
SUPEROSC_DEFINE_ERROR(DegenerateStretch);

#undef SUPEROSC_DEFINE_ERROR

}  // namespace superosc
