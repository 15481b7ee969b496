#pragma once

#include <stdexcept>
#include <string>

namespace mopquad {

enum class ErrorCode {
    UnknownClass,
    ParamCount,
    ParamDomain,
    BadN,
    Overflow,
    NonPositivePivot,
    ZeroPivot,
    NegativeProduct,
    NoConvergence,
    Pole,
    OutOfSupport,
    AccuracyLoss,
    RuleNotConverged,
    Unsupported,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, long index = -1)
        : std::runtime_error(what), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }
    // Offending index for pivot / convergence failures, -1 otherwise.
    long index() const noexcept { return index_; }

private:
    ErrorCode code_;
    long index_;
};

} // namespace mopquad
