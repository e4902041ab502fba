#include "jpm/error.hpp"

namespace jpm {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::BadSupport: return "BadSupport";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::WitnessNotIndependent: return "WitnessNotIndependent";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::PTooSmall: return "PTooSmall";
        case ErrorCode::NoPrimeInWindow: return "NoPrimeInWindow";
        case ErrorCode::MapNotInjective: return "MapNotInjective";
        case ErrorCode::BadPlaces: return "BadPlaces";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace jpm
