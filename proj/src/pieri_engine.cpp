#include "isopieri/pieri_engine.hpp"

#include <algorithm>

namespace isopieri {

void ClassExpansion::add(const SignedSequence& lambda, const BigInt& coeff) {
    if (lambda.n() != n_) throw Error(Errc::DimensionMismatch, "class of the wrong rank");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt ClassExpansion::coeff(const SignedSequence& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<SignedSequence, BigInt>> ClassExpansion::ordered_terms() const {
    std::vector<std::pair<SignedSequence, BigInt>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ca = codim(a.first), cb = codim(b.first);
        if (ca != cb) return ca > cb;
        return a.first < b.first;
    });
    return out;
}

BigInt pieri_coefficient(Family family, const SkewShape& s) {
    ShapeCounts c = counts(s);
    BigInt out = 1;
    int exponent = family == Family::B ? c.delta - 1 : c.epsilon;
    if (exponent < 0) throw Error(Errc::BadInput, "empty skew shape has no Pieri coefficient");
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return out;
}

ClassExpansion pieri(Family family, const SignedSequence& mu, int m) {
    if (m < 1 || m > mu.n()) throw Error(Errc::BadM, "m = " + std::to_string(m) + " outside [1, n]");
    ClassExpansion out(family, mu.n());
    for (const SignedSequence& lambda : enumerate_pieri_targets(mu, m))
        out.add(lambda, pieri_coefficient(family, skew(mu, lambda)));
    return out;
}

ClassExpansion& ClassExpansion::operator+=(const ClassExpansion& other) {
    if (family_ != other.family_) throw Error(Errc::FamilyMismatch, "cannot add P and Q expansions");
    if (n_ != other.n_) throw Error(Errc::DimensionMismatch, "expansions for different n");
    for (const auto& [lambda, c] : other.terms_) add(lambda, c);
    return *this;
}

ClassExpansion multiply_special(const ClassExpansion& e, int m) {
    if (m < 1 || m > e.n()) throw Error(Errc::BadM, "m = " + std::to_string(m) + " outside [1, n]");
    ClassExpansion out(e.family(), e.n());
    for (const auto& [mu, c] : e.ordered_terms())
        for (const auto& [lambda, d] : pieri(e.family(), mu, m).ordered_terms()) out.add(lambda, c * d);
    return out;
}

ClassExpansion single_class(Family family, const SignedSequence& lambda, const BigInt& coeff) {
    ClassExpansion out(family, lambda.n());
    out.add(lambda, coeff);
    return out;
}

int duality_pair(Family, const SignedSequence& mu, const SignedSequence& lambda) {
    if (mu.n() != lambda.n()) throw Error(Errc::DimensionMismatch, "sequences of different length");
    if (codim(mu) != codim(lambda)) throw Error(Errc::CodimMismatch, "codimensions differ");
    return mu == lambda ? 1 : 0;
}

BigInt triple_degree_prediction(Family family, const SignedSequence& mu, const SignedSequence& lambda, int m) {
    if (mu.n() != lambda.n()) throw Error(Errc::DimensionMismatch, "sequences of different length");
    if (codim(lambda) != codim(mu) + m) throw Error(Errc::CodimMismatch, "|λ| ≠ |μ| + m");
    if (!bruhat_leq(mu, lambda)) return 0;
    SkewShape s = skew(mu, lambda);
    if (!is_skew_row(s)) return 0;
    return pieri_coefficient(family, s);
}

}  // namespace isopieri
