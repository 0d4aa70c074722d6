#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace isopieri {

/// Sparse polynomial with integer coefficients in N ≤ 8 variables. Exponent
/// vectors are packed one byte per variable with x_1 in the most significant
/// byte, so numeric order on keys is lexicographic order on monomials.
class IntPolynomial {
public:
    using Key = std::uint64_t;
    static constexpr int kMaxVars = 8;

    explicit IntPolynomial(int nvars = 0);
    static IntPolynomial constant(int nvars, const mpz_class& c);

    int nvars() const { return nvars_; }
    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static Key pack(const std::vector<int>& exponents);
    std::vector<int> unpack(Key key) const;
    int exponent(Key key, int var) const;  // var is 0-based
    int degree_of(Key key) const;
    bool is_dominant(Key key) const;       // exponents weakly decreasing

    void add_term(Key key, const mpz_class& c);
    mpz_class coeff(const std::vector<int>& exponents) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial scaled(const mpz_class& c) const;
    bool operator==(const IntPolynomial& o) const = default;

    /// The part of this·o supported on dominant monomials. A symmetric
    /// polynomial is determined by its dominant part.
    IntPolynomial mul_dominant(const IntPolynomial& o) const;
    IntPolynomial dominant_part() const;

    /// Exact division of every coefficient; false if some coefficient is not divisible.
    bool divide_exact(const mpz_class& d);

    mpz_class evaluate(const std::vector<mpz_class>& point) const;
    IntPolynomial swap_variables(int a, int b) const;
    /// Drops monomials involving the last variable and removes that variable.
    IntPolynomial drop_last_variable() const;
    bool homogeneous_of_degree(int d) const;

private:
    int nvars_;
    std::map<Key, mpz_class> terms_;
};

}  // namespace isopieri
