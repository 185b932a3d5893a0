#ifndef SECTOR_ERRORS_HPP
#define SECTOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sector {

enum class ErrorKind {
    ZeroPolynomial,
    DegreeZero,
    SignIndeterminate,
    DegenerateChain,
    DegenerateAngle,
    ZeroOnRay,
    AmbiguousCrossing,
    OverlappingEnclosures,
    GenerationExhausted,
    CertificationFailed,
    NotNonNegative,
    HypothesisViolated,
    ParseError,
    OutOfRange,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::ParseError, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::SignIndeterminate: return "SignIndeterminate";
    case ErrorKind::DegenerateChain: return "DegenerateChain";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::ZeroOnRay: return "ZeroOnRay";
    case ErrorKind::AmbiguousCrossing: return "AmbiguousCrossing";
    case ErrorKind::OverlappingEnclosures: return "OverlappingEnclosures";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::NotNonNegative: return "NotNonNegative";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace sector

#endif
