#include "isopieri/schur_oracle.hpp"

#include <algorithm>
#include <functional>

namespace isopieri {

namespace {

using Shape = std::vector<int>;

IntPolynomial::Key variable_power(int nvars, int var, int power) {
    return static_cast<IntPolynomial::Key>(power) << (8 * (nvars - 1 - var));
}

void add_shifted(IntPolynomial& target, const IntPolynomial& source, IntPolynomial::Key shift, long factor) {
    mpz_class f = factor;
    for (const auto& [k, c] : source.terms()) target.add_term(k + shift, c * f);
}

// Variables are filled in order, so a monomial whose exponent of x_var exceeds
// that of x_{var-1} can never become dominant.
void add_shifted_dominant(IntPolynomial& target, const IntPolynomial& source, int var, int added) {
    IntPolynomial::Key shift = variable_power(target.nvars(), var, added);
    for (const auto& [k, c] : source.terms())
        if (var == 0 || source.exponent(k, var - 1) >= added) target.add_term(k + shift, c);
}

// Number of ways to fill the skew shifted shape nu2/nu with k' and k. A primed
// entry can only be the leftmost cell of its row segment; every cell of a
// column segment except the lowest must be primed.
long count_marked_fillings(const Shape& nu, const Shape& nu2) {
    std::vector<int> rows, starts, ends;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu2[i] == nu[i]) continue;
        rows.push_back(static_cast<int>(i));
        starts.push_back(static_cast<int>(i) + nu[i]);
        ends.push_back(static_cast<int>(i) + nu2[i] - 1);
    }
    if (rows.empty()) return 1;
    int lo = *std::min_element(starts.begin(), starts.end());
    int hi = *std::max_element(ends.begin(), ends.end());
    std::size_t r = rows.size();
    long total = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        bool ok = true;
        for (int c = lo; c <= hi && ok; ++c) {
            std::size_t last = r;
            for (std::size_t t = 0; t < r; ++t)
                if (starts[t] <= c && c <= ends[t]) last = t;
            if (last == r) continue;
            for (std::size_t t = 0; t < last; ++t) {
                if (!(starts[t] <= c && c <= ends[t])) continue;
                if (!(c == starts[t] && (mask & (1u << t)))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++total;
    }
    return total;
}

void shifted_extensions(const Shape& nu, const StrictPartition& lambda, std::size_t i, Shape& current,
                        const std::function<void(const Shape&)>& emit) {
    if (i == nu.size()) {
        emit(current);
        return;
    }
    for (int v = nu[i]; v <= lambda[i]; ++v) {
        if (i > 0 && v > 0 && v >= current[i - 1]) break;
        current[i] = v;
        shifted_extensions(nu, lambda, i + 1, current, emit);
    }
    current[i] = nu[i];
}

void horizontal_extensions(const Shape& nu, const std::vector<int>& rho, std::size_t i, Shape& current,
                           const std::function<void(const Shape&)>& emit) {
    if (i == nu.size()) {
        emit(current);
        return;
    }
    int upper = rho[i];
    if (i > 0) upper = std::min(upper, nu[i - 1]);
    for (int v = nu[i]; v <= upper; ++v) {
        current[i] = v;
        horizontal_extensions(nu, rho, i + 1, current, emit);
    }
    current[i] = nu[i];
}

void check_strict(const StrictPartition& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0) throw Error(Errc::BadInput, "strict partition parts must be positive");
        if (i > 0 && lambda[i] >= lambda[i - 1]) throw Error(Errc::NotDecreasing, "strict partition must decrease");
    }
}

int total(const std::vector<int>& parts) {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

}  // namespace

IntPolynomial schur_Q(const StrictPartition& lambda, int nvars) {
    check_strict(lambda);
    if (nvars < 1) throw Error(Errc::BadInput, "need at least one variable");
    if (static_cast<int>(lambda.size()) > nvars) return IntPolynomial(nvars);
    std::map<Shape, IntPolynomial> states;
    states.emplace(Shape(lambda.size(), 0), IntPolynomial::constant(nvars, 1));
    for (int var = 0; var < nvars; ++var) {
        std::map<Shape, IntPolynomial> next;
        for (const auto& [nu, poly] : states) {
            Shape current = nu;
            shifted_extensions(nu, lambda, 0, current, [&](const Shape& nu2) {
                long ways = count_marked_fillings(nu, nu2);
                if (ways == 0) return;
                int added = total(nu2) - total(nu);
                auto [it, _] = next.try_emplace(nu2, IntPolynomial(nvars));
                add_shifted(it->second, poly, variable_power(nvars, var, added), ways);
            });
        }
        states = std::move(next);
    }
    auto it = states.find(Shape(lambda.begin(), lambda.end()));
    return it == states.end() ? IntPolynomial(nvars) : it->second;
}

IntPolynomial schur_P(const StrictPartition& lambda, int nvars) {
    IntPolynomial q = schur_Q(lambda, nvars);
    mpz_class d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(lambda.size()));
    if (!q.divide_exact(d)) throw Error(Errc::NonDivisible, "Q_λ not divisible by 2^ℓ(λ)");
    return q;
}

namespace {

IntPolynomial classical_schur(const std::vector<int>& rho, int nvars, bool dominant_only) {
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] < 0 || (i > 0 && rho[i] > rho[i - 1])) throw Error(Errc::BadInput, "not a partition");
    std::vector<int> parts;
    for (int p : rho)
        if (p > 0) parts.push_back(p);
    if (static_cast<int>(parts.size()) > nvars) return IntPolynomial(nvars);
    std::map<Shape, IntPolynomial> states;
    states.emplace(Shape(parts.size(), 0), IntPolynomial::constant(nvars, 1));
    for (int var = 0; var < nvars; ++var) {
        std::map<Shape, IntPolynomial> next;
        for (const auto& [nu, poly] : states) {
            Shape current = nu;
            horizontal_extensions(nu, parts, 0, current, [&](const Shape& nu2) {
                int added = total(nu2) - total(nu);
                auto [it, _] = next.try_emplace(nu2, IntPolynomial(nvars));
                if (dominant_only)
                    add_shifted_dominant(it->second, poly, var, added);
                else
                    add_shifted(it->second, poly, variable_power(nvars, var, added), 1);
            });
        }
        states = std::move(next);
    }
    auto it = states.find(parts);
    return it == states.end() ? IntPolynomial(nvars) : it->second;
}

}  // namespace

IntPolynomial schur_S(const std::vector<int>& rho, int nvars) { return classical_schur(rho, nvars, false); }

const IntPolynomial& SchurOracle::shifted(const StrictPartition& lambda, int nvars, SchurBasis basis) {
    auto key = std::make_tuple(lambda, nvars, basis);
    auto it = shifted_cache_.find(key);
    if (it != shifted_cache_.end()) return it->second;
    IntPolynomial p = basis == SchurBasis::Q ? schur_Q(lambda, nvars) : schur_P(lambda, nvars);
    return shifted_cache_.emplace(key, std::move(p)).first->second;
}

const IntPolynomial& SchurOracle::shifted_dominant(const StrictPartition& lambda, int nvars, SchurBasis basis) {
    auto key = std::make_tuple(lambda, nvars, basis);
    auto it = shifted_dominant_cache_.find(key);
    if (it != shifted_dominant_cache_.end()) return it->second;
    IntPolynomial p = shifted(lambda, nvars, basis).dominant_part();
    return shifted_dominant_cache_.emplace(key, std::move(p)).first->second;
}

const IntPolynomial& SchurOracle::classical_dominant(const std::vector<int>& rho, int nvars) {
    auto key = std::make_pair(rho, nvars);
    auto it = classical_cache_.find(key);
    if (it != classical_cache_.end()) return it->second;
    return classical_cache_.emplace(key, classical_schur(rho, nvars, true)).first->second;
}

std::map<StrictPartition, BigInt> SchurOracle::expand_in_basis(const IntPolynomial& p, SchurBasis basis,
                                                                int degree) {
    if (!p.homogeneous_of_degree(degree)) throw Error(Errc::NotHomogeneous, "input is not homogeneous");
    std::map<StrictPartition, BigInt> out;
    IntPolynomial residual = p.dominant_part();
    int nvars = p.nvars();
    while (!residual.is_zero()) {
        auto lead = std::prev(residual.terms().end());
        std::vector<int> exps = residual.unpack(lead->first);
        StrictPartition alpha;
        for (int e : exps)
            if (e > 0) alpha.push_back(e);
        for (std::size_t i = 1; i < alpha.size(); ++i)
            if (alpha[i] >= alpha[i - 1])
                throw Error(Errc::ResidualNonzero, "leading monomial is not a strict partition");
        const IntPolynomial& b = shifted_dominant(alpha, nvars, basis);
        if (b.is_zero() || std::prev(b.terms().end())->first != lead->first)
            throw std::logic_error("basis polynomial has an unexpected leading monomial");
        mpz_class expected = 1;
        if (basis == SchurBasis::Q)
            mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(), static_cast<mp_bitcnt_t>(alpha.size()));
        const mpz_class& lc = std::prev(b.terms().end())->second;
        if (lc != expected) throw std::logic_error("basis polynomial has an unexpected leading coefficient");
        if (!mpz_divisible_p(lead->second.get_mpz_t(), lc.get_mpz_t()))
            throw Error(Errc::ResidualNonzero, "leading coefficient not divisible");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), lead->second.get_mpz_t(), lc.get_mpz_t());
        residual -= b.scaled(c);
        out[alpha] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

ClassExpansion SchurOracle::product(Family family, const SignedSequence& mu, int m) {
    int n = mu.n();
    if (m < 1 || m > n) throw Error(Errc::BadM, "m = " + std::to_string(m) + " outside [1, n]");
    StrictPartition mu_pos = mu.positive_parts();
    int nvars = static_cast<int>(mu_pos.size()) + 1;
    SchurBasis basis = family == Family::B ? SchurBasis::P : SchurBasis::Q;
    IntPolynomial prod = shifted(mu_pos, nvars, basis).mul_dominant(shifted({m}, nvars, basis));
    ClassExpansion out(family, n);
    for (const auto& [alpha, c] : expand_in_basis(prod, basis, codim(mu) + m)) {
        if (alpha.front() > n) continue;
        out.add(SignedSequence::from_positive(n, alpha), c);
    }
    return out;
}

BigInt SchurOracle::classical_triple_degree(const Partition& tau, const Partition& sigma, int k, int n) {
    if (k < 1 || n - k < 1) throw Error(Errc::BoxViolation, "hook h(n−k, k) needs 1 ≤ k < n");
    for (const Partition* p : {&tau, &sigma}) {
        if (static_cast<int>(p->parts.size()) > k) throw Error(Errc::BoxViolation, "more than k parts");
        for (std::size_t i = 0; i < p->parts.size(); ++i)
            if (p->parts[i] < 0 || p->parts[i] > n - k || (i > 0 && p->parts[i] > p->parts[i - 1]))
                throw Error(Errc::BoxViolation, "partition leaves the k × (n−k) box");
    }
    auto part = [](const Partition& p, std::size_t i) { return i < p.parts.size() ? p.parts[i] : 0; };
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
        if (part(tau, i) > part(sigma, i)) throw Error(Errc::NotContained, "τ is not contained in σ");

    std::vector<int> t(static_cast<std::size_t>(k)), s(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = part(tau, i);
        s[i] = part(sigma, i);
    }
    int hook_size = n - 1;
    if (total(s) != total(t) + hook_size) return 0;

    auto key = std::make_tuple(t, k, n);
    auto it = hook_products_.find(key);
    if (it == hook_products_.end()) {
        std::vector<int> hook(static_cast<std::size_t>(k), 1);
        hook[0] = n - k;
        // Expand by lex-leading terms; s_ρ has leading monomial x^ρ with coefficient 1.
        IntPolynomial residual = schur_S(t, k).mul_dominant(schur_S(hook, k));
        std::map<std::vector<int>, BigInt> expansion;
        while (!residual.is_zero()) {
            auto lead = std::prev(residual.terms().end());
            std::vector<int> rho = residual.unpack(lead->first);
            mpz_class c = lead->second;
            expansion[rho] = c;
            residual -= classical_dominant(rho, k).scaled(c);
        }
        it = hook_products_.emplace(key, std::move(expansion)).first;
    }
    auto found = it->second.find(s);
    return found == it->second.end() ? BigInt(0) : found->second;
}

std::map<StrictPartition, BigInt> expand_in_basis(const IntPolynomial& p, SchurBasis basis, int degree) {
    SchurOracle oracle;
    return oracle.expand_in_basis(p, basis, degree);
}

ClassExpansion oracle_product(Family family, const SignedSequence& mu, int m, int n) {
    if (mu.n() != n) throw Error(Errc::DimensionMismatch, "μ does not have n entries");
    SchurOracle oracle;
    return oracle.product(family, mu, m);
}

BigInt classical_triple_degree(const Partition& tau, const Partition& sigma, int k, int n) {
    SchurOracle oracle;
    return oracle.classical_triple_degree(tau, sigma, k, n);
}

}  // namespace isopieri
