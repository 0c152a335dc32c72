#pragma once

#include <stdexcept>
#include <string>

namespace quatunit {

// Exit-code classes: invalid input -> 1, resource limits -> 2, precision -> 3.
enum class ErrorKind {
    InvalidInput,
    DivisionByZero,
    NegativeOperand,
    NonPositiveOperand,
    ZeroOperand,
    NormNotAboveOne,
    ZeroGenerator,
    NotCommutative,
    NotCoplanar,
    OffCurve,
    PreconditionFailed,
    ResourceLimit,
    PrecisionFailure,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ResourceLimit:
        return 2;
    case ErrorKind::PrecisionFailure:
        return 3;
    case ErrorKind::Internal:
        return 3;
    default:
        return 1;
    }
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace quatunit
