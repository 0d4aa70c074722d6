#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isopieri {

/// Which maximal isotropic Grassmannian: B_n (odd orthogonal, classes P_λ)
/// or C_n (Lagrangian, classes Q_λ).
enum class Family { B, C };

inline std::string_view to_string(Family f) { return f == Family::B ? "B" : "C"; }

Family parse_family(std::string_view text);

enum class Errc {
    NotDecreasing,
    AbsValuesNotComplete,
    OutOfRange,
    DimensionMismatch,
    NotComparable,
    NoFirstColumnComponent,
    FirstColumnComponent,
    NotContained,
    BadM,
    FamilyMismatch,
    CodimMismatch,
    NonDivisible,
    NotHomogeneous,
    ResidualNonzero,
    BoxViolation,
    WrongDimension,
    BudgetExceeded,
    SingularPivot,
    Stuck,
    Unnormalizable,
    DegenerateVector,
    NeverStabilized,
    NotInIntersection,
    DivisionByZero,
    BadPrime,
    BadInput,
};

std::string_view to_string(Errc code);

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above. Violated internal invariants use std::logic_error.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace isopieri
