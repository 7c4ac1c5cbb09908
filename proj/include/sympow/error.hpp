#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sympow {

// Every failure the library can report. Input errors come from bad data,
// guard errors from configurable size limits, internal errors from
// cross-checks that can only fail on a bug.
enum class Errc {
    // input / validation
    EmptyEdge,
    DuplicateEdge,
    NestedEdges,
    NoEdges,
    IsolatedVertex,
    ParseError,
    BadParams,
    NotUniform,
    NotRPartite,
    NotThreePartite,
    TrivialHypergraph,
    NoPathsOfLength,
    MixedAmbient,
    ZeroIdeal,
    // guards
    TooLarge,
    Overflow,
    // cross-check failures: always a bug
    Internal,
};

enum class ErrorCategory { Input, Guard, Internal };

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Error(Errc code, const std::string& message, std::vector<int> indices)
        : std::runtime_error(message), code_(code), indices_(std::move(indices)) {}

    Errc code() const { return code_; }

    // Indices of the offending items (edge positions, vertex ids), when known.
    const std::vector<int>& indices() const { return indices_; }

    ErrorCategory category() const {
        switch (code_) {
        case Errc::TooLarge:
        case Errc::Overflow:
            return ErrorCategory::Guard;
        case Errc::Internal:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::Input;
        }
    }

private:
    Errc code_;
    std::vector<int> indices_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::vector<int> indices) {
    throw Error(code, message, std::move(indices));
}

// For consistency conditions that hold unless the implementation is wrong.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::Internal, "internal cross-check failed: " + what);
}

} // namespace sympow
