#ifndef QHERM_LINALG_HPP
#define QHERM_LINALG_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace qherm {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns pivot column per pivot row.
/// Pivoting is deterministic: first nonzero entry in column order.
inline std::vector<std::size_t> rref(Matrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[row]);
        Rational inv = a[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the nullspace of a (rows may be fewer than cols). Each vector is
/// scaled to integer entries with positive first nonzero coordinate, ordered
/// by free column.
inline std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t cols) {
    if (a.empty()) a.push_back(std::vector<Rational>(cols, Rational(0)));
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    // clear denominators, divide by content, first nonzero positive
    for (auto& v : basis) {
        mpz_class l(1);
        for (const auto& x : v)
            if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        Rational scale{mpz_class(l)};
        mpz_class g(0);
        for (auto& x : v) {
            x *= scale;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
        }
        if (g != 0) {
            Rational ginv = Rational(g).inverse();
            for (auto& x : v) x *= ginv;
        }
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x.sign() < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
    return basis;
}

/// Solves A x = b exactly; nullopt when inconsistent. Underdetermined
/// systems get free variables set to zero (deterministic).
inline std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
    auto pivots = rref(a);
    std::vector<Rational> x(cols, Rational(0));
    std::size_t nsolved = 0;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in augmented column
        x[pivots[r]] = a[r][cols];
        ++nsolved;
    }
    for (std::size_t r = nsolved; r < rows; ++r)
        if (!a[r][cols].is_zero()) return std::nullopt;
    return x;
}

/// Exact inverse; nullopt when singular.
inline std::optional<Matrix> inverse(Matrix a) {
    std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        a[r].resize(2 * n, Rational(0));
        a[r][n + r] = Rational(1);
    }
    auto pivots = rref(a);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (pivots[r] != r) return std::nullopt;
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
    return inv;
}

} // namespace qherm

#endif
