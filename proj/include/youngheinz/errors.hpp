#pragma once

#include <stdexcept>
#include <string>

namespace yh {

enum class ErrorCode {
    domain = 1,    // nonpositive scalar, weight outside its interval, bad grid
    range,         // depth above 60 or an intermediate that left double range
    shape,         // dimension mismatch or a non-Hermitian input
    definiteness,  // a matrix that must be (semi)definite is not
    accuracy,      // eigensolver did not converge
    precondition,  // spectral bounds violated, functional not log-convex
    degenerate,    // zero denominator inside a Kantorovich argument
    depth,         // refinement depth below the minimum a result needs
    branch,        // weight outside the interval a branch is stated on
    usage,         // malformed options or instance files
    unknown_entry, // registry id or glob that matches nothing
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

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace yh
