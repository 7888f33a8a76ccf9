#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankcurv {

enum class ErrorKind {
    DuplicateElement,
    UnknownIdentifier,
    CycleDetected,
    NotACover,
    SelfCover,
    NotRanked,
    NotComparable,
    InvalidComplex,
    InvalidMap,
    ParameterOutOfRange,
    WrongRank,
    EmptyLevel,
    NotAlmostPolyhedral,
    ParseError,
    IOError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception. `witness()` names
/// the element, pair or condition that triggered it, when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, std::string witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

} // namespace rankcurv
