#include "modcalc/linsolve.hpp"

namespace modcalc {

namespace {

unsigned long val_capped(const Int& x, const Int& p, unsigned k) {
    if (sgn(x) == 0) return k;
    unsigned long v = valuation(x, p);
    return v > k ? k : v;
}

}  // namespace

std::optional<std::vector<Int>> solve_mod_prime_power(std::vector<std::vector<Int>> A,
                                                      std::vector<Int> b,
                                                      const Int& p, unsigned k) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_mod_prime_power: shape mismatch");
    const Int pk = pow_ui(p, k);

    for (auto& row : A)
        for (auto& e : row) e = mod_floor(e, pk);
    for (auto& e : b) e = mod_floor(e, pk);

    // x = V y tracks the column operations
    std::vector<std::vector<Int>> V(cols, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

    std::vector<unsigned long> pivot_val;
    std::size_t step = 0;
    const std::size_t nsteps = rows < cols ? rows : cols;
    for (; step < nsteps; ++step) {
        // global min-valuation pivot in the remaining submatrix
        unsigned long best = k;
        std::size_t bi = step, bj = step;
        for (std::size_t i = step; i < rows; ++i)
            for (std::size_t j = step; j < cols; ++j) {
                unsigned long v = val_capped(A[i][j], p, k);
                if (v < best) { best = v; bi = i; bj = j; }
            }
        if (best >= k) break;  // submatrix is zero mod p^k

        std::swap(A[step], A[bi]);
        std::swap(b[step], b[bi]);
        if (bj != step)
            for (std::size_t i = 0; i < rows; ++i) std::swap(A[i][step], A[i][bj]);
        if (bj != step)
            for (std::size_t i = 0; i < cols; ++i) std::swap(V[i][step], V[i][bj]);

        // scale the pivot row so the pivot becomes exactly p^v
        const Int pv = pow_ui(p, best);
        Int unit = A[step][step] / pv;
        Int uinv = inv_mod(unit, pk);
        for (std::size_t j = step; j < cols; ++j) A[step][j] = mod_floor(A[step][j] * uinv, pk);
        b[step] = mod_floor(b[step] * uinv, pk);

        for (std::size_t i = step + 1; i < rows; ++i) {
            if (sgn(A[i][step]) == 0) continue;
            Int f = A[i][step] / pv;  // exact: valuation >= pivot valuation
            for (std::size_t j = step; j < cols; ++j)
                A[i][j] = mod_floor(A[i][j] - f * A[step][j], pk);
            b[i] = mod_floor(b[i] - f * b[step], pk);
        }
        for (std::size_t j = step + 1; j < cols; ++j) {
            if (sgn(A[step][j]) == 0) continue;
            Int f = A[step][j] / pv;
            A[step][j] = 0;
            for (std::size_t i = 0; i < cols; ++i)
                V[i][j] = mod_floor(V[i][j] - f * V[i][step], pk);
        }
        pivot_val.push_back(best);
    }

    for (std::size_t i = step; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;

    std::vector<Int> y(cols, 0);
    for (std::size_t s = 0; s < pivot_val.size(); ++s) {
        if (val_capped(b[s], p, k) < pivot_val[s]) return std::nullopt;
        y[s] = sgn(b[s]) == 0 ? Int(0) : Int(b[s] / pow_ui(p, pivot_val[s]));
    }

    std::vector<Int> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += V[i][j] * y[j];
        x[i] = mod_floor(acc, pk);
    }
    return x;
}

}  // namespace modcalc
