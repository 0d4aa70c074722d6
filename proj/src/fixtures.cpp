#include "isopieri/fixtures.hpp"

namespace isopieri {

namespace {

Vec<mpq_class> row(std::initializer_list<long> entries) {
    Vec<mpq_class> v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

}  // namespace

TwoLineFixture two_line_fixture(Family family) {
    TwoLineFixture fx;
    fx.family = family;
    fx.mu = SignedSequence::validate(4, {3, 2, -1, -4});
    fx.lambda = SignedSequence::validate(4, {4, 2, 1, -3});
    if (family == Family::B) {
        // columns e_{-4} .. e_4
        fx.k_rows = {row({0, 1, 0, 1, 0, 0, 1, 0, 1}), row({1, 1, 0, 1, 2, -2, 1, 1, -1}),
                     row({0, 0, 1, 0, 0, -1, 0, 0, 0})};
    } else {
        // columns f_{-4} .. f_{-1}, f_1 .. f_4
        fx.k_rows = {row({0, 1, 0, 1, 0, 1, 0, 1}), row({1, 1, 0, 1, 2, 1, -1, 1}), row({0, 0, 1, 0, 1, 0, 0, 0})};
    }
    fx.expected_parameters = {{0, 0}, {1, 1}};
    return fx;
}

Subspace<RationalField> two_line_chart(Family family, const mpq_class& x, const mpq_class& z) {
    RationalField f;
    BilinearSpace space(family, 4);
    auto g1 = unit_vector(f, space, 4);
    at(space, g1, 3) = -x;
    auto g2 = unit_vector(f, space, 2);
    auto g3 = unit_vector(f, space, -1);
    mpq_class twice_z = 2 * z;
    if (family == Family::B) {
        at(space, g3, 0) = twice_z;
        mpq_class e1 = -2 * z * z;
        at(space, g3, 1) = e1;
    } else {
        at(space, g3, 1) = twice_z;
    }
    auto g4 = unit_vector(f, space, -3);
    at(space, g4, -4) = x;
    return Subspace<RationalField>::span(f, space, {g1, g2, g3, g4});
}

std::optional<std::pair<mpq_class, mpq_class>> two_line_parameters(const Subspace<RationalField>& h) {
    const auto& f = h.field();
    const auto& space = h.space();
    if (space.n() != 4 || h.dim() != 4) return std::nullopt;
    auto top = intersection(h, coordinate_span(f, space, {3, 4}));
    if (top.dim() != 1) return std::nullopt;
    auto t = top.vectors().front();
    if (f.is_zero(at(space, t, 4))) return std::nullopt;
    mpq_class x = -at(space, t, 3) / at(space, t, 4);

    std::vector<int> middle = space.family() == Family::B ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 1};
    auto mid = intersection(h, coordinate_span(f, space, middle));
    if (mid.dim() != 1) return std::nullopt;
    auto w = mid.vectors().front();
    const mpq_class& lead = at(space, w, -1);
    if (f.is_zero(lead)) return std::nullopt;
    int zc = space.family() == Family::B ? 0 : 1;
    mpq_class z = at(space, w, zc) / (2 * lead);

    if (!(two_line_chart(space.family(), x, z) == h)) return std::nullopt;
    return std::make_pair(x, z);
}

SolverFixture rank_six_solver_fixture() {
    return {SignedSequence::validate(6, {5, 3, 1, -2, -4, -6}), SignedSequence::validate(6, {6, 5, 3, 1, -2, -4})};
}

std::vector<mpq_class> rank_six_closed_form(const std::vector<mpq_class>& x) {
    std::vector<mpq_class> y(7, 0);
    y[2] = -x[1] / x[2];
    y[3] = -x[2];
    y[4] = -y[3] * x[3] / x[4];
    y[5] = -x[4];
    y[6] = -x[5] * y[5];
    return y;
}

std::vector<ExpansionFixture> expansion_fixtures() {
    auto mu = SignedSequence::validate(4, {3, 2, -1, -4});
    auto a = SignedSequence::validate(4, {4, 2, 1, -3});
    auto b = SignedSequence::validate(4, {4, 3, -1, -2});
    ClassExpansion eb(Family::B, 4);
    eb.add(a, 2);
    eb.add(b, 1);
    ClassExpansion ec(Family::C, 4);
    ec.add(a, 2);
    ec.add(b, 2);
    return {{Family::B, mu, 2, eb}, {Family::C, mu, 2, ec}};
}

}  // namespace isopieri
