#pragma once

// Exact residue arithmetic over factored moduli, centered representatives,
// p-valuations, and the small number-theoretic utility functions the rest
// of the library leans on.

#include "modcalc/int_util.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace modcalc::core {

// A positive modulus together with its factorization into prime powers.
// Primes are distinct; value always equals the product of the powers.
class Modulus {
public:
    static Modulus from_factors(std::vector<std::pair<Int, unsigned>> factors);
    static Modulus from_value(const Int& value);  // trial-division factoring
    static Modulus prime_power(const Int& p, unsigned k);

    const Int& value() const { return value_; }
    const std::vector<std::pair<Int, unsigned>>& factors() const { return factors_; }
    bool is_prime_power() const { return factors_.size() == 1; }
    bool all_odd() const;

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.value_ == b.value_; }

private:
    Modulus() = default;
    std::vector<std::pair<Int, unsigned>> factors_;
    Int value_;
};

// Residue class mod a Modulus, stored least-nonnegative.
class Residue {
public:
    Residue(Int rep, Modulus mod) : mod_(std::move(mod)), rep_(mod_floor(rep, mod_.value())) {}

    const Int& rep() const { return rep_; }
    const Modulus& modulus() const { return mod_; }
    Int centered() const;

    bool is_unit() const { return gcd(rep_, mod_.value()) == 1; }

    Residue operator+(const Residue& o) const { return with(rep_ + o.check(mod_)); }
    Residue operator-(const Residue& o) const { return with(rep_ - o.check(mod_)); }
    Residue operator*(const Residue& o) const { return with(rep_ * o.check(mod_)); }
    Residue operator-() const { return with(-rep_); }
    Residue pow(const Int& e) const { return Residue(pow_mod_signed(rep_, e, mod_.value()), mod_); }
    Residue inverse() const { return Residue(inv_mod(rep_, mod_.value()), mod_); }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.mod_ == b.mod_ && a.rep_ == b.rep_;
    }

private:
    Residue with(Int v) const { return Residue(std::move(v), mod_); }
    const Int& check(const Modulus& m) const;

    Modulus mod_;
    Int rep_;
};

// Exact element of Z_p-with-denominators: sign * p^val * num/den with num,
// den coprime to p, plus a dedicated zero state. Series terms like p^i/i!
// are carried here and divided on valuations, never by modular inversion.
class ValuedRational {
public:
    static ValuedRational zero(const Int& p) { return ValuedRational(p); }
    static ValuedRational from_fraction(const Int& p, Int num, Int den);
    static ValuedRational from_int(const Int& p, const Int& v) { return from_fraction(p, v, 1); }

    bool is_zero() const { return zero_; }
    long val() const;  // throws on zero
    const Int& prime() const { return p_; }

    ValuedRational operator+(const ValuedRational& o) const;
    ValuedRational operator*(const ValuedRational& o) const;
    ValuedRational operator-() const;

    // The value mod p^m as an integer in [0, p^m); requires val() >= 0.
    Int reduce(unsigned m) const;

private:
    explicit ValuedRational(Int p) : p_(std::move(p)), zero_(true), val_(0), num_(0), den_(1) {}
    ValuedRational(Int p, long val, Int num, Int den);

    Int p_;
    bool zero_;
    long val_;
    Int num_, den_;  // both coprime to p_, den_ > 0
};

// Unique y = x (mod q) in the centered window: odd q gives |y| <= (q-1)/2,
// even q gives -q/2 < y <= q/2.
Int centered_rep(const Int& x, const Int& q);

// Chinese remainder combination of (rep, prime-power modulus) pairs.
// Moduli must be pairwise coprime.
Residue crt_combine(const std::vector<std::pair<Int, Modulus>>& parts);

// Product over primes p | Q of p^{v_p(x)}. x != 0.
Int val_part(const Int& x, const Modulus& Q);

// Product of the distinct primes dividing q; radical(1) = 1.
Int radical(const Int& q);

// Least s >= 1 with y^s = 1 (mod x) for all y coprime to x (x >= 2).
Int carmichael(const Int& x);

// x^{p(p-1)-1} mod p^2, the canonical inverse-of-a-unit convention.
Residue unit_inverse_convention(const Int& x, const Int& p);

// All y mod p with y^a = x (mod p); may be empty.
std::set<Int> nth_root_set(const Int& x, unsigned long a, const Int& p);

}  // namespace modcalc::core
