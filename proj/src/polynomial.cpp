#include "isopieri/polynomial.hpp"

#include <stdexcept>

namespace isopieri {

IntPolynomial::IntPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("IntPolynomial supports at most 8 variables");
}

IntPolynomial IntPolynomial::constant(int nvars, const mpz_class& c) {
    IntPolynomial p(nvars);
    p.add_term(0, c);
    return p;
}

IntPolynomial::Key IntPolynomial::pack(const std::vector<int>& exponents) {
    Key key = 0;
    for (int e : exponents) {
        if (e < 0 || e > 255) throw std::out_of_range("exponent out of packing range");
        key = (key << 8) | static_cast<Key>(e);
    }
    return key;
}

std::vector<int> IntPolynomial::unpack(Key key) const {
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (int i = nvars_ - 1; i >= 0; --i) {
        e[static_cast<std::size_t>(i)] = static_cast<int>(key & 0xff);
        key >>= 8;
    }
    return e;
}

int IntPolynomial::exponent(Key key, int var) const {
    return static_cast<int>((key >> (8 * (nvars_ - 1 - var))) & 0xff);
}

int IntPolynomial::degree_of(Key key) const {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += exponent(key, i);
    return d;
}

bool IntPolynomial::is_dominant(Key key) const {
    int prev = 256;
    for (int i = 0; i < nvars_; ++i) {
        int e = exponent(key, i);
        if (e > prev) return false;
        prev = e;
    }
    return true;
}

void IntPolynomial::add_term(Key key, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class IntPolynomial::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(pack(exponents));
    return it == terms_.end() ? mpz_class(0) : it->second;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r(*this);
    r += o;
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r(*this);
    r -= o;
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    IntPolynomial r(nvars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

IntPolynomial IntPolynomial::mul_dominant(const IntPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    IntPolynomial r(nvars_);
    mpz_class prod;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k = ka + kb;
            if (!r.is_dominant(k)) continue;
            prod = ca * cb;
            r.add_term(k, prod);
        }
    return r;
}

IntPolynomial IntPolynomial::dominant_part() const {
    IntPolynomial r(nvars_);
    for (const auto& [k, c] : terms_)
        if (is_dominant(k)) r.terms_.emplace(k, c);
    return r;
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
    IntPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool IntPolynomial::divide_exact(const mpz_class& d) {
    for (const auto& [k, c] : terms_)
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return false;
    for (auto& [k, c] : terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return true;
}

mpz_class IntPolynomial::evaluate(const std::vector<mpz_class>& point) const {
    mpz_class total = 0;
    for (const auto& [k, c] : terms_) {
        mpz_class term = c;
        for (int i = 0; i < nvars_; ++i) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), point[static_cast<std::size_t>(i)].get_mpz_t(),
                       static_cast<unsigned long>(exponent(k, i)));
            term *= pw;
        }
        total += term;
    }
    return total;
}

IntPolynomial IntPolynomial::swap_variables(int a, int b) const {
    IntPolynomial r(nvars_);
    for (const auto& [k, c] : terms_) {
        auto e = unpack(k);
        std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
        r.add_term(pack(e), c);
    }
    return r;
}

IntPolynomial IntPolynomial::drop_last_variable() const {
    IntPolynomial r(nvars_ - 1);
    for (const auto& [k, c] : terms_)
        if ((k & 0xff) == 0) r.add_term(k >> 8, c);
    return r;
}

bool IntPolynomial::homogeneous_of_degree(int d) const {
    for (const auto& [k, c] : terms_)
        if (degree_of(k) != d) return false;
    return true;
}

}  // namespace isopieri
