#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "isopieri/common.hpp"
#include "isopieri/shifted_shapes.hpp"

namespace isopieri {

using BigInt = mpz_class;

/// Integer combination of Schubert classes P_λ (family B) or Q_λ (family C).
class ClassExpansion {
public:
    ClassExpansion(Family family, int n) : family_(family), n_(n) {}

    Family family() const { return family_; }
    int n() const { return n_; }

    void add(const SignedSequence& lambda, const BigInt& coeff);
    BigInt coeff(const SignedSequence& lambda) const;
    /// Termwise sum; both sides must share family and n.
    ClassExpansion& operator+=(const ClassExpansion& other);
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Terms by decreasing codimension, then lexicographically increasing.
    std::vector<std::pair<SignedSequence, BigInt>> ordered_terms() const;

    bool operator==(const ClassExpansion& other) const = default;

private:
    Family family_;
    int n_;
    std::map<SignedSequence, BigInt> terms_;
};

ClassExpansion pieri(Family family, const SignedSequence& mu, int m);
ClassExpansion multiply_special(const ClassExpansion& e, int m);
ClassExpansion single_class(Family family, const SignedSequence& lambda, const BigInt& coeff = 1);

/// Coefficient of [pt] in the product of the classes indexed by μ and λ^c.
int duality_pair(Family family, const SignedSequence& mu, const SignedSequence& lambda);

/// Predicted number of points of X_μ ∩ X'_{λ^c} ∩ X_K for a general K.
BigInt triple_degree_prediction(Family family, const SignedSequence& mu, const SignedSequence& lambda, int m);

/// Pieri coefficient of a skew row: 2^{δ-1} (B) or 2^{ε} (C).
BigInt pieri_coefficient(Family family, const SkewShape& s);

}  // namespace isopieri
