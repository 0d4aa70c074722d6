#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "isopieri/common.hpp"

namespace isopieri {

/// Element of F_p. The modulus travels with the value so arithmetic needs no
/// external context.
struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    friend Fp operator+(Fp a, Fp b) {
        std::uint32_t s = a.v + b.v;
        return {s >= a.p ? s - a.p : s, a.p};
    }
    friend Fp operator-(Fp a, Fp b) { return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p}; }
    friend Fp operator*(Fp a, Fp b) {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % a.p), a.p};
    }
    friend Fp operator-(Fp a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator<(Fp a, Fp b) { return a.v < b.v; }
};

class PrimeField {
public:
    using value_type = Fp;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    Fp zero() const { return {0, p_}; }
    Fp one() const { return {1 % p_, p_}; }
    Fp from_int(long x) const;
    Fp from_rational(const mpq_class& q) const;
    bool is_zero(Fp a) const { return a.v == 0; }
    Fp inv(Fp a) const;
    Fp div(Fp a, Fp b) const { return a * inv(b); }
    Fp random(std::mt19937_64& rng) const;
    Fp random_nonzero(std::mt19937_64& rng) const;
    /// Representative in (-p/2, p/2].
    long to_long(Fp a) const;
    std::string format(Fp a) const { return std::to_string(to_long(a)); }
    std::string name() const { return "F" + std::to_string(p_); }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using value_type = mpq_class;

    explicit RationalField(int sample_range = 9) : range_(sample_range) {}

    mpq_class zero() const { return 0; }
    mpq_class one() const { return 1; }
    mpq_class from_int(long x) const { return x; }
    mpq_class from_rational(const mpq_class& q) const { return q; }
    bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;
    /// Uniform integer in [-range, range].
    mpq_class random(std::mt19937_64& rng) const;
    mpq_class random_nonzero(std::mt19937_64& rng) const;
    std::string format(const mpq_class& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

private:
    int range_;
};

/// Seed for the i-th independent stream derived from a root seed.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream);

}  // namespace isopieri
