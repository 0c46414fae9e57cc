#include "bjw/linsolve.hpp"

#include <stdexcept>

namespace bjw {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

struct EchelonForm {
    std::vector<std::vector<BigInt>> rows;  // augmented, cols + 1 wide
    std::vector<std::size_t> pivot_col;     // per eliminated row
    bool feasible = true;
};

// Fraction-free forward elimination (Bareiss): stays in integers, each exact
// division by the previous pivot is guaranteed to be exact.
EchelonForm eliminate(std::vector<std::vector<BigInt>> m, std::size_t cols) {
    EchelonForm e;
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const BigInt p = m[rank][col];
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const BigInt f = m[i][col];
            for (std::size_t j = col; j <= cols; ++j) {
                BigInt num = p * m[i][j] - f * m[rank][j];
                // Bareiss guarantees exact division; cpp_int would truncate
                // silently, so an inexact quotient must be a hard error.
                if (prev != 1 && num % prev != 0)
                    throw std::logic_error("eliminate: inexact fraction-free division");
                m[i][j] = num / prev;
            }
        }
        prev = p;
        e.pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < m.size(); ++i) {
        if (m[i][cols] != 0) e.feasible = false;
    }
    m.resize(rank);
    e.rows = std::move(m);
    return e;
}

// Back-substitution for the pivot variables given fixed free-variable values.
std::vector<Rational> back_substitute(const EchelonForm& e, std::size_t cols,
                                      const std::vector<Rational>& free_values,
                                      const std::vector<std::size_t>& free_cols,
                                      bool homogeneous) {
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = free_values[k];
    for (std::size_t i = e.rows.size(); i-- > 0;) {
        std::size_t pc = e.pivot_col[i];
        Rational acc = homogeneous ? Rational(0) : Rational(e.rows[i][cols]);
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (e.rows[i][j] != 0 && x[j] != 0) acc -= Rational(e.rows[i][j]) * x[j];
        }
        x[pc] = acc / Rational(e.rows[i][pc]);
    }
    return x;
}

}  // namespace

AffineSolution solve_exact(const std::vector<std::vector<Rational>>& a,
                           const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_exact: row/rhs mismatch");
    std::size_t cols = a.empty() ? 0 : a.front().size();

    // Clear denominators row by row.
    std::vector<std::vector<BigInt>> m(a.size(), std::vector<BigInt>(cols + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");
        BigInt scale = 1;
        for (const Rational& r : a[i]) scale = lcm(scale, denominator(r));
        scale = lcm(scale, denominator(b[i]));
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = numerator(a[i][j]) * (scale / denominator(a[i][j]));
        m[i][cols] = numerator(b[i]) * (scale / denominator(b[i]));
    }

    EchelonForm e = eliminate(std::move(m), cols);
    AffineSolution sol;
    sol.feasible = e.feasible;
    if (!sol.feasible) return sol;

    std::vector<std::size_t> free_cols;
    {
        std::size_t next = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (next < e.pivot_col.size() && e.pivot_col[next] == col)
                ++next;
            else
                free_cols.push_back(col);
        }
    }

    std::vector<Rational> zeros(free_cols.size(), Rational(0));
    sol.particular = back_substitute(e, cols, zeros, free_cols, /*homogeneous=*/false);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::vector<Rational> unit(free_cols.size(), Rational(0));
        unit[k] = 1;
        sol.nullspace.push_back(back_substitute(e, cols, unit, free_cols, /*homogeneous=*/true));
    }
    return sol;
}

bool affine_contains(const AffineSolution& sol, const std::vector<Rational>& v) {
    if (!sol.feasible || v.size() != sol.particular.size()) return false;
    // Solve basis * lambda = v - particular.
    std::size_t n = v.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(sol.nullspace.size(), Rational(0)));
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < sol.nullspace.size(); ++k) a[i][k] = sol.nullspace[k][i];
        rhs[i] = v[i] - sol.particular[i];
    }
    return solve_exact(a, rhs).feasible;
}

}  // namespace bjw
