#pragma once

#include <cstddef>
#include <vector>

#include "relhyp/rational.hpp"

namespace relhyp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename T>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    T objective{};
    std::vector<T> x;    // primal solution, one entry per variable
    std::vector<T> dual; // one entry per equality constraint
};

/// Minimize c.x subject to A x = b, x >= 0, by the two-phase dense simplex
/// method with Bland's rule (no cycling). Works over exact rationals or
/// doubles; with T = Rat every result is exact.
template <typename T>
LpResult<T> simplex_solve(std::vector<std::vector<T>> A, std::vector<T> b,
                          const std::vector<T>& c) {
    const size_t m = A.size();
    const size_t n = m == 0 ? c.size() : A[0].size();
    // normalize b >= 0, remembering flips to restore dual signs later
    std::vector<char> flipped(m, 0);
    for (size_t i = 0; i < m; ++i)
        if (b[i] < T(0)) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
            flipped[i] = 1;
        }
    // tableau: m rows of n original + m artificial columns + rhs
    const size_t total = n + m;
    std::vector<std::vector<T>> tab(m, std::vector<T>(total + 1, T(0)));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
        tab[i][n + i] = T(1);
        tab[i][total] = b[i];
        basis[i] = n + i;
    }

    auto pivot = [&](size_t row, size_t col) {
        T p = tab[row][col];
        for (auto& v : tab[row]) v /= p;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || tab[i][col] == T(0)) continue;
            T f = tab[i][col];
            for (size_t j = 0; j <= total; ++j) tab[i][j] -= f * tab[row][j];
        }
        basis[row] = col;
    };

    // Runs simplex iterations for the given cost vector over `ncols` columns;
    // returns false if unbounded. Bland's rule: smallest eligible indices.
    auto iterate = [&](const std::vector<T>& cost, size_t ncols) {
        while (true) {
            // reduced costs r_j = c_j - y.A_j with y from the basis
            size_t enter = total;
            for (size_t j = 0; j < ncols; ++j) {
                bool basic = false;
                for (size_t i = 0; i < m; ++i) basic |= (basis[i] == j);
                if (basic) continue;
                T r = cost[j];
                for (size_t i = 0; i < m; ++i) r -= cost[basis[i]] * tab[i][j];
                if (r < T(0)) {
                    enter = j;
                    break;
                }
            }
            if (enter == total) return true; // optimal
            size_t leave = m;
            for (size_t i = 0; i < m; ++i) {
                if (tab[i][enter] <= T(0)) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                T lhs = tab[i][total] * tab[leave][enter];
                T rhs = tab[leave][total] * tab[i][enter];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m) return false; // unbounded
            pivot(leave, enter);
        }
    };

    LpResult<T> res;
    // Phase I: minimize the sum of artificials.
    std::vector<T> cost1(total, T(0));
    for (size_t j = n; j < total; ++j) cost1[j] = T(1);
    iterate(cost1, total);
    T phase1 = T(0);
    for (size_t i = 0; i < m; ++i)
        if (basis[i] >= n) phase1 += tab[i][total];
    if (phase1 > T(0)) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    // Drive remaining degenerate artificials out of the basis when possible.
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        size_t col = n;
        for (size_t j = 0; j < n; ++j)
            if (tab[i][j] != T(0)) {
                col = j;
                break;
            }
        if (col < n) pivot(i, col);
        // otherwise the row is all-zero over original columns (redundant)
    }

    // Phase II over original columns only.
    std::vector<T> cost2(total, T(0));
    for (size_t j = 0; j < n; ++j) cost2[j] = c[j];
    if (!iterate(cost2, n)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x.assign(n, T(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = tab[i][total];
    res.objective = T(0);
    for (size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    // Dual from the artificial columns: their final entries are B^{-1}, so
    // y_i = sum_k c_{basis[k]} (B^{-1})_{k,i}.
    res.dual.assign(m, T(0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t k = 0; k < m; ++k) res.dual[i] += cost2[basis[k]] * tab[k][n + i];
        if (flipped[i]) res.dual[i] = -res.dual[i];
    }
    return res;
}

} // namespace relhyp
