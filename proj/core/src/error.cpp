#include "mopquad/error.hpp"

namespace mopquad {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::ParamCount: return "ParamCount";
    case ErrorCode::ParamDomain: return "ParamDomain";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonPositivePivot: return "NonPositivePivot";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::NegativeProduct: return "NegativeProduct";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::OutOfSupport: return "OutOfSupport";
    case ErrorCode::AccuracyLoss: return "AccuracyLoss";
    case ErrorCode::RuleNotConverged: return "RuleNotConverged";
    case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

} // namespace mopquad
