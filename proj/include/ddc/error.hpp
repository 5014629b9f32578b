#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ddc {

enum class ErrorCode {
    InvalidLetter,
    NotReduced,
    ParseError,
    ResourceLimit,
    EmptySet,
    NotEquiLength,
    BadDiameter,
    BadParameter,
    MalformedTable,
    NonAssociative,
    UnreachableElements,
    UnknownElement,
    NotADdc,
    DiameterTooSmall,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Caller-configurable guards for anything that materializes elements or
// compares ordered pairs. Streaming enumeration is never guarded.
struct Guards {
    std::uint64_t max_elements = 10'000'000;
    std::uint64_t max_pairs = std::uint64_t{1} << 31;
    unsigned threads = 1;
};

}  // namespace ddc
