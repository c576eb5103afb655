#pragma once

#include <stdexcept>
#include <string>

namespace tfplc {

enum class ErrorCode {
    AsymmetricAdjacency,
    NotAnEmbedding,
    OuterNotAFace,
    NotTwoConnected,
    NotACycle,
    AdjacentVertices,
    NoSharedFace,
    NotTriangleFree,
    PNotBoundaryPath,
    PTooLong,
    ListSizeOutOfRange,
    SNotIndependent,
    NotAChord,
    NotApplicable,
    InvalidTarget,
    InternalNoReduction,
    NoAdmissibleColour,
    NoColouring,
    DisagreementOnShared,
    CapTooSmall,
    BoundExceeded,
    ParseError,
    Truncated,
    BadHeader,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace tfplc
