#include "youngheinz/errors.hpp"

namespace yh {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::range: return "range";
        case ErrorCode::shape: return "shape";
        case ErrorCode::definiteness: return "definiteness";
        case ErrorCode::accuracy: return "accuracy";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::degenerate: return "degenerate";
        case ErrorCode::depth: return "depth";
        case ErrorCode::branch: return "branch";
        case ErrorCode::usage: return "usage";
        case ErrorCode::unknown_entry: return "unknown_entry";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace yh
