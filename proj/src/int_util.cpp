#include "modcalc/int_util.hpp"

namespace modcalc {

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("inv_mod: " + a.get_str() + " not invertible mod " + m.get_str());
    return r;
}

Int pow_mod_signed(const Int& base, const Int& e, const Int& m) {
    if (sgn(e) >= 0) return pow_mod(base, e, m);
    return pow_mod(inv_mod(base, m), Int(-e), m);
}

unsigned long remove_factor(Int& x, const Int& p) {
    if (sgn(x) == 0) throw std::invalid_argument("remove_factor: zero argument");
    Int out;
    unsigned long n = mpz_remove(out.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    x = out;
    return n;
}

unsigned long valuation(const Int& x, const Int& p) {
    Int tmp = x;
    return remove_factor(tmp, p);
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (sgn(n) <= 0) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    Int rest = n;
    for (Int d = 2; d * d <= rest && d <= 1000000; d = (d == 2 ? Int(3) : d + 2)) {
        if (rest % d == 0) {
            unsigned e = static_cast<unsigned>(remove_factor(rest, d));
            out.emplace_back(d, e);
        }
    }
    if (rest > 1) {
        if (!is_prime(rest))
            throw std::invalid_argument("factorize: composite cofactor beyond trial-division bound");
        out.emplace_back(rest, 1);
    }
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace modcalc
