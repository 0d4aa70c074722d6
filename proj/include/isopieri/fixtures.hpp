#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isopieri/geometry.hpp"
#include "isopieri/pieri_engine.hpp"

namespace isopieri {

/// n = 4, m = 2, μ = [3,2,-1,-4], λ = [4,2,1,-3]: a rational isotropic 3-plane K
/// whose first two rows span the two expected lines, with the two-parameter
/// chart H(x, z) of the intersection written in its own sign convention.
struct TwoLineFixture {
    Family family = Family::B;
    int n = 4;
    int m = 2;
    SignedSequence mu;
    SignedSequence lambda;
    std::vector<Vec<mpq_class>> k_rows;
    /// (x, z) of the subspace through k_rows[0] and k_rows[1].
    std::vector<std::pair<mpq_class, mpq_class>> expected_parameters;
};

TwoLineFixture two_line_fixture(Family family);

/// Row span of g_1 = e_4 - x e_3, g_2 = e_2, g_3 = e_{-1} + 2z e_0 - 2z² e_1
/// (f_{-1} + 2z f_1 in family C), g_4 = x e_{-4} + e_{-3}.
Subspace<RationalField> two_line_chart(Family family, const mpq_class& x, const mpq_class& z);

/// (x, z) with two_line_chart(x, z) = h, if h lies in that chart.
std::optional<std::pair<mpq_class, mpq_class>> two_line_parameters(const Subspace<RationalField>& h);

/// n = 6, λ = [6,5,3,1,-2,-4], μ = [5,3,1,-2,-4,-6]: a single first-column
/// component with k = 3 whose y-equations have closed-form solutions.
struct SolverFixture {
    SignedSequence mu;
    SignedSequence lambda;
};

SolverFixture rank_six_solver_fixture();

/// y_2..y_6 (indices 2..6 of a length-7 vector) from x_0..x_5:
/// y_2 = -x_1/x_2, y_3 = -x_2, y_4 = -y_3 x_3/x_4, y_5 = -x_4, y_6 = -x_5 y_5.
std::vector<mpq_class> rank_six_closed_form(const std::vector<mpq_class>& x);

struct ExpansionFixture {
    Family family;
    SignedSequence mu;
    int m;
    ClassExpansion expected;
};

/// P_{[3,2,-1,-4]}·p_2 and Q_{[3,2,-1,-4]}·q_2 at n = 4.
std::vector<ExpansionFixture> expansion_fixtures();

}  // namespace isopieri
