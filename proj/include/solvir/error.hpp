#ifndef SOLVIR_ERROR_HPP
#define SOLVIR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace solvir {

enum class ErrorKind {
    ZeroForm,
    DenominatorVanishes,
    Unsupported,
    Parse,
    RankMismatch,
    CentralTermPresent,
    AxisOutOfRange,
    FitFailed,
    NotACocycle,
    NotNormalizable,
    NotCubicOdd,
    OutsideBox,
    BoxTooSmall,
    WrongCase,
    BoxOverflow,
    NonHomogeneous,
    NotFormalParams,
};

inline std::string_view error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::CentralTermPresent: return "CentralTermPresent";
    case ErrorKind::AxisOutOfRange: return "AxisOutOfRange";
    case ErrorKind::FitFailed: return "FitFailed";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::NotCubicOdd: return "NotCubicOdd";
    case ErrorKind::OutsideBox: return "OutsideBox";
    case ErrorKind::BoxTooSmall: return "BoxTooSmall";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::BoxOverflow: return "BoxOverflow";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::NotFormalParams: return "NotFormalParams";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type; `kind()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace solvir

#endif
