#ifndef DAISY_ERRORS_HPP
#define DAISY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace daisy {

// Every failure the library can surface. Validation codes come first,
// algorithmic and capability limits after.
enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    LabelWidthMismatch,
    NonUnitHammingEdge,
    DuplicateLabel,
    BaseOutOfRange,
    Unreachable,
    EmptySet,
    EmptyInput,
    Disconnected,
    NotBipartite,
    NotPartialCube,
    IsometryViolation,
    SingletonGraph,
    Overflow,
    NegativeCoefficient,
    ArityMismatch,
    DimensionTooLarge,
    TooLarge,
    WidthMismatch,
    EmptyX,
    LimitExceeded,
    StageLimitExceeded,
    IntermediateNotPartialCube,
    InvalidSpec,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace daisy

#endif
