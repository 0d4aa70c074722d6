#include "isopieri/field.hpp"

namespace isopieri {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p == 2) throw Error(Errc::BadPrime, "characteristic 2 is not supported");
    if (!is_prime(p) || p >= (1u << 31)) throw Error(Errc::BadPrime, std::to_string(p) + " is not an odd prime");
}

Fp PrimeField::from_int(long x) const {
    long r = x % static_cast<long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_};
}

Fp PrimeField::from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0) throw Error(Errc::DivisionByZero, "denominator divisible by p");
    return div(from_int(num.get_si()), from_int(den.get_si()));
}

Fp PrimeField::inv(Fp a) const {
    if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in " + name());
    // Fermat: a^(p-2).
    Fp result = one(), base = a;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Fp PrimeField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return {dist(rng), p_};
}

Fp PrimeField::random_nonzero(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(1, p_ - 1);
    return {dist(rng), p_};
}

long PrimeField::to_long(Fp a) const {
    long v = a.v;
    return v > static_cast<long>(p_ / 2) ? v - static_cast<long>(p_) : v;
}

mpq_class RationalField::inv(const mpq_class& a) const {
    if (sgn(a) == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
}

mpq_class RationalField::div(const mpq_class& a, const mpq_class& b) const {
    if (sgn(b) == 0) throw Error(Errc::DivisionByZero, "division by 0 in Q");
    return a / b;
}

mpq_class RationalField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> dist(-range_, range_);
    return dist(rng);
}

mpq_class RationalField::random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        mpq_class x = random(rng);
        if (sgn(x) != 0) return x;
    }
}

std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream) {
    // splitmix64 applied to root + stream·golden.
    std::uint64_t z = root + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace isopieri
