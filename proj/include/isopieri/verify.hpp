#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "isopieri/common.hpp"
#include "isopieri/pieri_engine.hpp"

namespace isopieri {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int retries = 20;
    std::uint64_t budget = 2'000'000;
    bool extended = false;
    std::vector<Family> families{Family::B, Family::C};
    int n_max = 0;         // 0: the sweep's default
    std::uint32_t p = 0;   // 0: the sweep's default
    int samples = 0;       // 0: the sweep's default
};

struct VerifyReport {
    std::string name;
    bool passed = true;
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures;  // first few only
    nlohmann::json details = nlohmann::json::object();

    void fail(const std::string& message);
    nlohmann::json to_json() const;
};

nlohmann::json expansion_json(const ClassExpansion& e);

/// Coefficients of the two n = 4 expansion fixtures.
VerifyReport verify_expansion_fixtures();
/// Rule vs symmetric-function oracle for every μ ∈ SY_n and 1 ≤ m ≤ n (n ≤ 5).
VerifyReport verify_pieri_oracle(const VerifyOptions& opt);
/// X_μ ∩ X'_{λ^c} is one point iff λ = μ when |λ| = |μ| (F_3, n ≤ 3; n = 4 when extended).
VerifyReport verify_duality(const VerifyOptions& opt);
/// triple_count equals the prediction for every (μ, m, λ) (F_5, n = 3).
VerifyReport verify_triple(const VerifyOptions& opt);
/// Column-count identities for every μ ≤ λ (n ≤ 6).
VerifyReport verify_column_counts(const VerifyOptions& opt);
/// Lines and reconstructed chart parameters of the two-line fixtures over ℚ.
VerifyReport verify_rational_fixture(const VerifyOptions& opt);
/// Closed forms of the rank-six solver fixture on random rational x.
VerifyReport verify_solver_fixture(const VerifyOptions& opt);
/// (·p_a)·p_b = (·p_b)·p_a for every μ and a < b (n ≤ 5).
VerifyReport verify_commutativity(const VerifyOptions& opt);
/// Enumeration finds exactly the reconstructed H through sampled v (F_5, n = 3).
VerifyReport verify_reconstruction(const VerifyOptions& opt);
/// Orthogonal-to-symplectic transfer is a bijection on enumerated points (F_3, n ≤ 2).
VerifyReport verify_transfer(const VerifyOptions& opt);
/// Expansion, rational and solver fixtures together.
VerifyReport verify_fixtures(const VerifyOptions& opt);

}  // namespace isopieri
