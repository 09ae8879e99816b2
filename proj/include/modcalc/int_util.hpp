#pragma once

// Arbitrary-precision integer helpers shared by every module. The library
// works at "desk scale": moduli are prime powers or their products, primes
// come from trial division, everything is exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcalc {

using Int = mpz_class;

inline Int int_from(long v) { return Int(v); }

// x mod m, always in [0, m)
inline Int mod_floor(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e mod m, e >= 0
inline Int pow_mod(const Int& base, const Int& e, const Int& m) {
    if (sgn(e) < 0) throw std::invalid_argument("pow_mod: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Inverse of a mod m; throws if gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& m);

// base^e mod m where e may be negative (base must be a unit then).
Int pow_mod_signed(const Int& base, const Int& e, const Int& m);

// Largest n with p^n | x, and x / p^n via out-param. x != 0.
unsigned long remove_factor(Int& x, const Int& p);
unsigned long valuation(const Int& x, const Int& p);

bool is_prime(const Int& n);

// Trial division by primes up to 10^6; throws if a composite cofactor
// beyond that bound remains (factoring big moduli is a non-goal).
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// Exact binomial coefficient.
Int binomial(unsigned long n, unsigned long k);

// Deterministic 64-bit linear congruential generator. The constants are
// fixed so that every run (and any reimplementation) reproduces the same
// stream: x <- 6364136223846793005*x + 1442695040888963407 (mod 2^64).
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform draw in [0, bound) via the high bits of a 128-bit product.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Lcg64: zero bound");
        unsigned __int128 wide = static_cast<unsigned __int128>(next()) * bound;
        return static_cast<std::uint64_t>(wide >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace modcalc
