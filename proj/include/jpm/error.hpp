#pragma once

#include <stdexcept>
#include <string>

namespace jpm {

enum class ErrorCode {
    InvalidSpec,
    TooLarge,
    DimensionMismatch,
    UnknownVertex,
    BadSupport,
    InvalidParams,
    WitnessNotIndependent,
    NotPrime,
    PTooSmall,
    NoPrimeInWindow,
    MapNotInjective,
    BadPlaces,
    Overflow,
    Parse,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace jpm
