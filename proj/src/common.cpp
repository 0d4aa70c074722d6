#include "isopieri/common.hpp"

namespace isopieri {

Family parse_family(std::string_view text) {
    if (text == "B" || text == "b") return Family::B;
    if (text == "C" || text == "c") return Family::C;
    throw Error(Errc::BadInput, "family must be B or C, got '" + std::string(text) + "'");
}

std::string_view to_string(Errc code) {
    switch (code) {
    case Errc::NotDecreasing: return "NotDecreasing";
    case Errc::AbsValuesNotComplete: return "AbsValuesNotComplete";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NoFirstColumnComponent: return "NoFirstColumnComponent";
    case Errc::FirstColumnComponent: return "FirstColumnComponent";
    case Errc::NotContained: return "NotContained";
    case Errc::BadM: return "BadM";
    case Errc::FamilyMismatch: return "FamilyMismatch";
    case Errc::CodimMismatch: return "CodimMismatch";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ResidualNonzero: return "ResidualNonzero";
    case Errc::BoxViolation: return "BoxViolation";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SingularPivot: return "SingularPivot";
    case Errc::Stuck: return "Stuck";
    case Errc::Unnormalizable: return "Unnormalizable";
    case Errc::DegenerateVector: return "DegenerateVector";
    case Errc::NeverStabilized: return "NeverStabilized";
    case Errc::NotInIntersection: return "NotInIntersection";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadPrime: return "BadPrime";
    case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

} // namespace isopieri
