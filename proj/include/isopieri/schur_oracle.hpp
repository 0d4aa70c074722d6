#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "isopieri/pieri_engine.hpp"
#include "isopieri/polynomial.hpp"
#include "isopieri/shifted_shapes.hpp"

namespace isopieri {

/// Strictly decreasing positive parts.
using StrictPartition = std::vector<int>;

enum class SchurBasis { P, Q };

/// Q_λ(x_1..x_N) as a sum over marked shifted tableaux: letters 1' < 1 < 2' < ...,
/// rows and columns weakly increasing, each k at most once per column and each
/// k' at most once per row.
IntPolynomial schur_Q(const StrictPartition& lambda, int nvars);
/// P_λ = 2^{-ℓ(λ)} Q_λ.
IntPolynomial schur_P(const StrictPartition& lambda, int nvars);
/// Classical Schur polynomial s_ρ(x_1..x_k) from semistandard tableaux.
IntPolynomial schur_S(const std::vector<int>& rho, int nvars);

/// Holds memoized polynomials. Each instance is independent; nothing is shared
/// between instances.
class SchurOracle {
public:
    const IntPolynomial& shifted(const StrictPartition& lambda, int nvars, SchurBasis basis);
    const IntPolynomial& shifted_dominant(const StrictPartition& lambda, int nvars, SchurBasis basis);
    const IntPolynomial& classical_dominant(const std::vector<int>& rho, int nvars);

    /// Expansion of a symmetric polynomial in P or Q functions by lex-leading terms.
    std::map<StrictPartition, BigInt> expand_in_basis(const IntPolynomial& p, SchurBasis basis, int degree);

    /// P_{μ⁺}·P_{(m)} (B) or Q_{μ⁺}·Q_{(m)} (C), truncated to λ_1 ≤ n.
    ClassExpansion product(Family family, const SignedSequence& mu, int m);

    /// Coefficient of s_σ in s_τ · s_{(n−k, 1^{k−1})} in k variables.
    BigInt classical_triple_degree(const Partition& tau, const Partition& sigma, int k, int n);

private:
    std::map<std::tuple<StrictPartition, int, SchurBasis>, IntPolynomial> shifted_cache_;
    std::map<std::tuple<StrictPartition, int, SchurBasis>, IntPolynomial> shifted_dominant_cache_;
    std::map<std::pair<std::vector<int>, int>, IntPolynomial> classical_cache_;
    std::map<std::tuple<std::vector<int>, int, int>, std::map<std::vector<int>, BigInt>> hook_products_;
};

std::map<StrictPartition, BigInt> expand_in_basis(const IntPolynomial& p, SchurBasis basis, int degree);
ClassExpansion oracle_product(Family family, const SignedSequence& mu, int m, int n);
BigInt classical_triple_degree(const Partition& tau, const Partition& sigma, int k, int n);

}  // namespace isopieri
