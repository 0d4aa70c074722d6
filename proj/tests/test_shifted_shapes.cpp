#include <doctest.h>

#include <algorithm>
#include <set>

#include "isopieri/shifted_shapes.hpp"

using namespace isopieri;

namespace {

SignedSequence S(int n, std::vector<int> e) { return SignedSequence::validate(n, std::move(e)); }

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::BadInput;
}

}  // namespace

TEST_CASE("validate accepts SY_n sequences and rejects malformed ones") {
    CHECK(S(4, {3, 2, -1, -4}).entries() == std::vector<int>{3, 2, -1, -4});
    CHECK(error_of([] { S(3, {1, 2, -3}); }) == Errc::NotDecreasing);
    CHECK(error_of([] { S(3, {3, 2, -2}); }) == Errc::AbsValuesNotComplete);
    CHECK(error_of([] { S(3, {4, 2, -1}); }) == Errc::OutOfRange);
    CHECK(error_of([] { S(3, {3, 0, -1}); }) == Errc::OutOfRange);
}

TEST_CASE("negative entries are forced by the positive ones") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& s : all_sequences(n)) CHECK(SignedSequence::from_positive(n, s.positive_parts()) == s);
    CHECK(all_sequences(5).size() == 32);
}

TEST_CASE("codim") {
    CHECK(codim(S(4, {3, 2, -1, -4})) == 5);
    CHECK(codim(S(3, {-1, -2, -3})) == 0);
    CHECK(codim(S(4, {4, 2, 1, -3})) == 7);
}

TEST_CASE("bruhat order") {
    auto mu = S(4, {3, 2, -1, -4});
    auto lambda = S(4, {4, 2, 1, -3});
    CHECK(bruhat_leq(mu, lambda));
    CHECK(bruhat_leq(mu, mu));
    CHECK_FALSE(bruhat_leq(lambda, mu));
    CHECK(error_of([&] { bruhat_leq(mu, S(3, {3, 2, 1})); }) == Errc::DimensionMismatch);
}

TEST_CASE("bruhat order only depends on rows with positive μ_j") {
    for (int n = 1; n <= 5; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (const auto& lambda : all) {
                bool positive_rows = true;
                for (int j = 1; j <= n; ++j)
                    if (mu(j) > 0 && mu(j) > lambda(j)) positive_rows = false;
                CHECK(bruhat_leq(mu, lambda) == positive_rows);
            }
    }
}

TEST_CASE("complement") {
    CHECK(complement(S(4, {4, 2, 1, -3})) == S(4, {3, -1, -2, -4}));
    CHECK(complement(S(3, {-1, -2, -3})) == S(3, {3, 2, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : all_sequences(n)) {
            CHECK(complement(complement(l)) == l);
            CHECK(codim(l) + codim(complement(l)) == n * (n + 1) / 2);
        }
}

TEST_CASE("skew shapes of the n = 4 examples") {
    auto mu = S(4, {3, 2, -1, -4});
    SUBCASE("two components") {
        auto s = skew(mu, S(4, {4, 2, 1, -3}));
        CHECK(s.boxes == std::vector<Cell>{{1, 4}, {3, 1}});
        REQUIRE(s.components.size() == 2);
        CHECK(s.components[0].boxes == std::vector<Cell>{{1, 4}});
        CHECK(s.components[0].col_set == std::vector<int>{3, 4});
        CHECK(s.components[1].col_set == std::vector<int>{0, 1});
        CHECK(s.components[1].meets_first_column);
        CHECK(s.fixed_indices == std::vector<int>{2});
        CHECK_FALSE(s.zero_is_fixed);
        auto c = counts(s);
        CHECK(c.delta == 2);
        CHECK(c.epsilon == 1);
        CHECK(c.psi == 1);
        CHECK(c.phi == 1);
        CHECK(is_skew_row(s));
    }
    SUBCASE("vertex-adjacent boxes form one component") {
        auto s = skew(mu, S(4, {4, 3, -1, -2}));
        CHECK(s.boxes == std::vector<Cell>{{1, 4}, {2, 3}});
        CHECK(s.components.size() == 1);
        CHECK(s.fixed_indices == std::vector<int>{3});
        CHECK(s.zero_is_fixed);
        auto c = counts(s);
        CHECK(c.delta == 1);
        CHECK(c.epsilon == 1);
        CHECK(c.psi == 1);
        CHECK(c.phi == 2);
    }
    SUBCASE("empty shape") {
        auto s = skew(mu, mu);
        CHECK(s.boxes.empty());
        CHECK(s.components.empty());
        CHECK(s.fixed_indices == std::vector<int>{1, 2, 3, 4});
        CHECK(s.zero_is_fixed);
        CHECK(is_skew_row(s));
        auto c = counts(s);
        CHECK(c.delta == 0);
        CHECK(c.epsilon == 0);
        CHECK(c.psi == 4);
        CHECK(c.phi == 5);
    }
    CHECK(error_of([&] { skew(S(4, {4, 2, 1, -3}), mu); }) == Errc::NotComparable);
}

TEST_CASE("skew rows") {
    CHECK(is_skew_row(skew(S(4, {3, 2, -1, -4}), S(4, {4, 2, 1, -3}))));
    // Two boxes of 321̄4̄/12̄3̄4̄ share column 1.
    CHECK_FALSE(is_skew_row(skew(S(4, {1, -2, -3, -4}), S(4, {3, 2, -1, -4}))));
}

TEST_CASE("diagram rendering") {
    auto s = skew(S(4, {3, 2, -1, -4}), S(4, {4, 2, 1, -3}));
    CHECK(render_diagram(s) == "...a\n..\nb\n");
    CHECK(render_diagram(skew(S(3, {-1, -2, -3}), S(3, {-1, -2, -3}))).empty());
}

TEST_CASE("pieri targets") {
    auto mu = S(4, {3, 2, -1, -4});
    CHECK(enumerate_pieri_targets(mu, 2) == std::vector<SignedSequence>{S(4, {4, 2, 1, -3}), S(4, {4, 3, -1, -2})});
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> bottom, top;
        for (int j = 1; j <= n; ++j) {
            bottom.push_back(-j);
            top.push_back(n + 1 - j);
        }
        for (int m = 1; m <= n; ++m) {
            auto t = enumerate_pieri_targets(S(n, bottom), m);
            REQUIRE(t.size() == 1);
            CHECK(t[0].positive_parts() == std::vector<int>{m});
            CHECK(enumerate_pieri_targets(S(n, top), m).empty());
        }
    }
    CHECK(error_of([&] { enumerate_pieri_targets(mu, 0); }) == Errc::BadM);
}

TEST_CASE("pieri targets agree with a brute-force filter over SY_n") {
    for (int n = 1; n <= 6; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (int m = 1; m <= n; ++m) {
                std::vector<SignedSequence> brute;
                for (const auto& lambda : all)
                    if (bruhat_leq(mu, lambda) && codim(lambda) == codim(mu) + m && is_skew_row(skew(mu, lambda)))
                        brute.push_back(lambda);
                CHECK(enumerate_pieri_targets(mu, m) == brute);
            }
    }
}

TEST_CASE("column-count identities for both conventions") {
    for (int n = 1; n <= 6; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (const auto& lambda : all) {
                if (!bruhat_leq(mu, lambda)) continue;
                auto s = skew(mu, lambda);
                auto c = counts(s);
                int cols = occupied_columns(s);
                CHECK(n + 1 == c.phi + c.delta + cols);
                CHECK(n == c.psi + c.epsilon + cols);
                CHECK(s.zero_is_fixed ==
                      std::none_of(s.components.begin(), s.components.end(),
                                   [](const Component& d) { return d.meets_first_column; }));
            }
    }
}

TEST_CASE("empty columns and the comparison μ_j > λ_{j+1}") {
    // An empty column |μ_j| forces μ_j > λ_{j+1} (λ_{n+1} = -∞). The converse
    // holds for μ_j > 0; for μ_j < 0 the column is empty exactly when j is fixed.
    for (int n = 1; n <= 5; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (const auto& lambda : all) {
                if (!bruhat_leq(mu, lambda)) continue;
                auto s = skew(mu, lambda);
                std::set<int> cols;
                for (const auto& b : s.boxes) cols.insert(b.col);
                for (int j = 1; j <= n; ++j) {
                    bool empty = cols.count(std::abs(mu(j))) == 0;
                    bool above_next = j == n || mu(j) > lambda(j + 1);
                    if (empty) CHECK(above_next);
                    if (mu(j) > 0) CHECK(above_next == empty);
                    else CHECK(empty == (mu(j) == lambda(j)));
                }
            }
    }
}

TEST_CASE("first-column subproblem") {
    auto s = skew(S(4, {3, 2, -1, -4}), S(4, {4, 2, 1, -3}));
    auto sub = first_column_subproblem(s);
    CHECK(sub.mu == S(1, {-1}));
    CHECK(sub.lambda == S(1, {1}));
    CHECK(sub.rows == std::vector<int>{3});

    auto whole = skew(S(2, {-1, -2}), S(2, {2, -1}));
    REQUIRE(whole.components.size() == 1);
    auto same = first_column_subproblem(whole);
    CHECK(same.mu == whole.mu);
    CHECK(same.lambda == whole.lambda);

    CHECK(error_of([] { first_column_subproblem(skew(S(4, {3, 2, -1, -4}), S(4, {4, 3, -1, -2}))); }) ==
          Errc::NoFirstColumnComponent);
}

TEST_CASE("component subproblem") {
    auto s = skew(S(4, {3, 2, -1, -4}), S(4, {4, 2, 1, -3}));
    auto sub = component_subproblem(s, s.components[0]);
    CHECK(sub.mu == S(2, {1, -2}));
    CHECK(sub.lambda == S(2, {2, -1}));
    CHECK(sub.shift == 2);
    auto inner = skew(sub.mu, sub.lambda);
    CHECK(inner.boxes == std::vector<Cell>{{1, 2}});
    CHECK(error_of([&] { component_subproblem(s, s.components[1]); }) == Errc::FirstColumnComponent);
}

TEST_CASE("subproblems of every skew row satisfy the reindexing postconditions") {
    for (int n = 1; n <= 5; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (const auto& lambda : all) {
                if (mu == lambda || !bruhat_leq(mu, lambda)) continue;
                auto s = skew(mu, lambda);
                if (!is_skew_row(s)) continue;
                for (const auto& d : s.components) {
                    if (d.meets_first_column) {
                        auto sub = first_column_subproblem(s);
                        auto t = skew(sub.mu, sub.lambda);
                        REQUIRE(t.components.size() == 1);
                        CHECK(t.components[0].meets_first_column);
                        CHECK(t.fixed_indices.empty());
                        CHECK(t.boxes.size() == d.boxes.size());
                        CHECK(sub.mu.n() == d.columns.back());
                    } else {
                        auto sub = component_subproblem(s, d);
                        auto t = skew(sub.mu, sub.lambda);
                        REQUIRE(t.components.size() == 1);
                        CHECK_FALSE(t.components[0].meets_first_column);
                        CHECK(t.fixed_indices.empty());
                        CHECK(t.zero_is_fixed);
                        CHECK(t.boxes.size() == d.boxes.size());
                        CHECK(sub.mu.n() == static_cast<int>(d.col_set.size()));
                    }
                }
            }
    }
}

TEST_CASE("classical shadow") {
    auto sh = classical_shadow(S(4, {3, 2, -1, -4}), S(4, {4, 3, -1, -2}));
    CHECK(sh.k == 2);
    CHECK(sh.tau.parts == std::vector<int>{1, 1});
    CHECK(sh.sigma.parts == std::vector<int>{2, 2});
    auto mu = S(4, {3, 2, -1, -4});
    auto same = classical_shadow(mu, mu);
    CHECK(same.tau == same.sigma);
    auto bottom = classical_shadow(S(3, {-1, -2, -3}), S(3, {2, -1, -3}));
    CHECK(bottom.k == 0);
    CHECK(bottom.tau.parts.empty());
    CHECK(bottom.sigma.parts.empty());
}

TEST_CASE("one box per diagonal") {
    auto P = [](std::vector<int> parts) { return Partition{static_cast<int>(parts.size()), 10, parts}; };
    CHECK(one_box_per_diagonal(P({1, 1}), P({2, 2})));
    CHECK(one_box_per_diagonal(P({}), P({2})));
    CHECK(one_box_per_diagonal(P({}), P({1, 1})));
    CHECK_FALSE(one_box_per_diagonal(P({}), P({2, 2})));
    CHECK(one_box_per_diagonal(P({}), P({})));
    CHECK(error_of([&] { one_box_per_diagonal(P({2}), P({1})); }) == Errc::NotContained);
}

TEST_CASE("single-component skew rows map columns to diagonals") {
    for (int n = 1; n <= 5; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (const auto& lambda : all) {
                if (mu == lambda || !bruhat_leq(mu, lambda)) continue;
                auto s = skew(mu, lambda);
                if (!is_skew_row(s) || s.components.size() != 1 || !s.fixed_indices.empty()) continue;
                auto sh = classical_shadow(mu, lambda);
                CHECK(one_box_per_diagonal(sh.tau, sh.sigma));
            }
    }
}
