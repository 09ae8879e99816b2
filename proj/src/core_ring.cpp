#include "modcalc/core_ring.hpp"

#include <algorithm>

namespace modcalc::core {

Modulus Modulus::from_factors(std::vector<std::pair<Int, unsigned>> factors) {
    if (factors.empty()) throw std::invalid_argument("Modulus: empty factor list");
    std::sort(factors.begin(), factors.end());
    Modulus m;
    m.value_ = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& [p, e] = factors[i];
        if (p < 2 || !is_prime(p)) throw std::invalid_argument("Modulus: factor not prime");
        if (e < 1) throw std::invalid_argument("Modulus: exponent < 1");
        if (i > 0 && factors[i - 1].first == p) throw std::invalid_argument("Modulus: repeated prime");
        m.value_ *= pow_ui(p, e);
    }
    m.factors_ = std::move(factors);
    return m;
}

Modulus Modulus::from_value(const Int& value) {
    if (value < 2) throw std::invalid_argument("Modulus: value must be >= 2");
    return from_factors(factorize(value));
}

Modulus Modulus::prime_power(const Int& p, unsigned k) {
    return from_factors({{p, k}});
}

bool Modulus::all_odd() const {
    for (const auto& [p, e] : factors_)
        if (p == 2) return false;
    return true;
}

Int Residue::centered() const { return centered_rep(rep_, mod_.value()); }

const Int& Residue::check(const Modulus& m) const {
    if (!(mod_ == m)) throw std::invalid_argument("Residue: modulus mismatch");
    return rep_;
}

ValuedRational ValuedRational::from_fraction(const Int& p, Int num, Int den) {
    if (sgn(den) == 0) throw std::invalid_argument("ValuedRational: zero denominator");
    if (sgn(num) == 0) return zero(p);
    if (sgn(den) < 0) { num = -num; den = -den; }
    long v = 0;
    v += static_cast<long>(remove_factor(num, p));
    v -= static_cast<long>(remove_factor(den, p));
    Int g = gcd(num, den);
    if (sgn(g) < 0) g = -g;
    return ValuedRational(p, v, num / g, den / g);
}

ValuedRational::ValuedRational(Int p, long val, Int num, Int den)
    : p_(std::move(p)), zero_(false), val_(val), num_(std::move(num)), den_(std::move(den)) {}

long ValuedRational::val() const {
    if (zero_) throw std::logic_error("ValuedRational: valuation of zero");
    return val_;
}

ValuedRational ValuedRational::operator+(const ValuedRational& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ValuedRational: prime mismatch");
    if (zero_) return o;
    if (o.zero_) return *this;
    long v = std::min(val_, o.val_);
    Int a = num_ * o.den_ * pow_ui(p_, static_cast<unsigned long>(val_ - v));
    Int b = o.num_ * den_ * pow_ui(p_, static_cast<unsigned long>(o.val_ - v));
    Int num = a + b;
    if (sgn(num) == 0) return zero(p_);
    Int den = den_ * o.den_;
    long extra = static_cast<long>(remove_factor(num, p_));
    Int g = gcd(num, den);
    if (sgn(g) < 0) g = -g;
    return ValuedRational(p_, v + extra, num / g, den / g);
}

ValuedRational ValuedRational::operator*(const ValuedRational& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ValuedRational: prime mismatch");
    if (zero_ || o.zero_) return zero(p_);
    Int num = num_ * o.num_;
    Int den = den_ * o.den_;
    Int g = gcd(num, den);
    if (sgn(g) < 0) g = -g;
    return ValuedRational(p_, val_ + o.val_, num / g, den / g);
}

ValuedRational ValuedRational::operator-() const {
    if (zero_) return *this;
    return ValuedRational(p_, val_, -num_, den_);
}

Int ValuedRational::reduce(unsigned m) const {
    Int pm = pow_ui(p_, m);
    if (zero_) return 0;
    if (val_ < 0) throw std::domain_error("ValuedRational: negative valuation, not a residue");
    if (val_ >= static_cast<long>(m)) return 0;
    // p^val * (num/den mod p^{m-val}), exact because den is a unit there
    unsigned rest = m - static_cast<unsigned>(val_);
    Int prest = pow_ui(p_, rest);
    Int u = mod_floor(num_ * inv_mod(den_, prest), prest);
    return mod_floor(u * pow_ui(p_, static_cast<unsigned long>(val_)), pm);
}

Int centered_rep(const Int& x, const Int& q) {
    if (q < 1) throw std::invalid_argument("centered_rep: q must be positive");
    Int r = mod_floor(x, q);
    if (q % 2 == 0) {
        if (r > q / 2) r -= q;
    } else {
        if (r > (q - 1) / 2) r -= q;
    }
    return r;
}

Residue crt_combine(const std::vector<std::pair<Int, Modulus>>& parts) {
    if (parts.empty()) throw std::invalid_argument("crt_combine: empty input");
    Int x = mod_floor(parts[0].first, parts[0].second.value());
    Int m = parts[0].second.value();
    std::vector<std::pair<Int, unsigned>> factors = parts[0].second.factors();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Int& n = parts[i].second.value();
        if (gcd(m, n) != 1) throw std::invalid_argument("crt_combine: moduli not coprime");
        Int b = mod_floor(parts[i].first, n);
        // x' = x + m * ((b - x) / m mod n)
        Int t = mod_floor((b - x) * inv_mod(m, n), n);
        x += m * t;
        m *= n;
        for (const auto& f : parts[i].second.factors()) factors.push_back(f);
    }
    return Residue(x, Modulus::from_factors(std::move(factors)));
}

Int val_part(const Int& x, const Modulus& Q) {
    if (sgn(x) == 0) throw std::invalid_argument("val_part: zero argument");
    Int out = 1;
    for (const auto& [p, e] : Q.factors())
        out *= pow_ui(p, valuation(x, p));
    return out;
}

Int radical(const Int& q) {
    if (q < 1) throw std::invalid_argument("radical: argument must be positive");
    if (q == 1) return 1;
    Int out = 1;
    for (const auto& [p, e] : factorize(q)) out *= p;
    return out;
}

Int carmichael(const Int& x) {
    if (x < 2) throw std::invalid_argument("carmichael: argument must be >= 2");
    Int out = 1;
    for (const auto& [p, e] : factorize(x)) {
        Int comp;
        if (p == 2) {
            if (e == 1) comp = 1;
            else if (e == 2) comp = 2;
            else comp = pow_ui(2, e - 2);
        } else {
            comp = pow_ui(p, e - 1) * (p - 1);
        }
        out = out / gcd(out, comp) * comp;  // lcm
    }
    return out;
}

Residue unit_inverse_convention(const Int& x, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("unit_inverse_convention: p not prime");
    if (mod_floor(x, p) == 0) throw std::invalid_argument("unit_inverse_convention: p divides x");
    Modulus p2 = Modulus::prime_power(p, 2);
    return Residue(pow_mod(mod_floor(x, p2.value()), p * (p - 1) - 1, p2.value()), p2);
}

std::set<Int> nth_root_set(const Int& x, unsigned long a, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("nth_root_set: p not prime");
    std::set<Int> out;
    Int target = mod_floor(x, p);
    for (Int y = 0; y < p; ++y)
        if (pow_mod(y, Int(static_cast<unsigned long>(a)), p) == target) out.insert(y);
    return out;
}

}  // namespace modcalc::core
