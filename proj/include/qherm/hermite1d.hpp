#ifndef QHERM_HERMITE1D_HPP
#define QHERM_HERMITE1D_HPP

#include <string>
#include <vector>

#include "multipoly.hpp"

namespace qherm {

/// Probabilists' Hermite polynomial, monic, by the three-term recurrence
/// H_{n+1} = x H_n - n H_{n-1}.
inline MultiPoly classical_hermite(unsigned n) {
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly prev = MultiPoly::constant(1, 1);
    if (n == 0) return prev;
    MultiPoly cur = x;
    for (unsigned k = 1; k < n; ++k) {
        MultiPoly next = x * cur - Rational(static_cast<long>(k)) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// c_{m,n} = prod_{k=1..m} (n - 2k + 1).
inline Rational hermite_c(long m, long n) {
    Rational c(1);
    for (long k = 1; k <= m; ++k) c *= Rational(n - 2 * k + 1);
    return c;
}

/// Wronskian W[f_1,...,f_k] by cofactor expansion; fine at desk sizes.
inline MultiPoly wronskian(const std::vector<MultiPoly>& fs) {
    std::size_t k = fs.size();
    std::vector<std::vector<MultiPoly>> M(k, std::vector<MultiPoly>(k, MultiPoly(1)));
    for (std::size_t c = 0; c < k; ++c) {
        M[0][c] = fs[c];
        for (std::size_t r = 1; r < k; ++r) M[r][c] = M[r - 1][c].derivative(0);
    }
    auto det = [&](auto&& self, std::vector<std::size_t> rows,
                   std::vector<std::size_t> colsv) -> MultiPoly {
        if (rows.size() == 1) return M[rows[0]][colsv[0]];
        MultiPoly acc(1);
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        for (std::size_t c = 0; c < colsv.size(); ++c) {
            std::vector<std::size_t> subcols;
            for (std::size_t t = 0; t < colsv.size(); ++t)
                if (t != c) subcols.push_back(colsv[t]);
            MultiPoly sub = self(self, subrows, subcols);
            MultiPoly term = M[rows[0]][colsv[c]] * sub;
            acc += (c % 2 == 0) ? term : -term;
        }
        return acc;
    };
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    return det(det, all, all);
}

enum class MHermiteStrategy { Wronskian, GenFun, Recurrence };

struct MHermite1dResult {
    long m = 0;
    long n = 0;
    MultiPoly H;
    Rational c_mn;
    MultiPoly monic_part;

    MHermite1dResult() : H(1), monic_part(1) {}
};

/// m-Hermite polynomial on the line, by one of three routes that must agree:
///  - Wronskian W[x, x^3, ..., x^{2m-1}, H_n] with the exact prefactor,
///  - generating function phi_m(x,k) e^{-k^2/2} = sum H_n^{(m)} k^n/n!,
///  - the coefficient recurrence of the eigenvalue equation, scaled by c_{m,n}.
inline MHermite1dResult mhermite(long m, long n, MHermiteStrategy strategy) {
    if (m < 0 || n < 0) throw std::invalid_argument("mhermite: m, n >= 0 required");
    MHermite1dResult res;
    res.m = m;
    res.n = n;
    res.c_mn = hermite_c(m, n);
    MultiPoly x = MultiPoly::variable(1, 0);
    switch (strategy) {
    case MHermiteStrategy::Wronskian: {
        std::vector<MultiPoly> fs;
        for (long j = 1; j <= m; ++j) fs.push_back(x.pow(static_cast<unsigned>(2 * j - 1)));
        fs.push_back(classical_hermite(static_cast<unsigned>(n)));
        MultiPoly W = wronskian(fs);
        unsigned e = static_cast<unsigned>(m * (m - 1) / 2);
        Rational scale = Rational(2).pow(e);
        for (long j = 1; j <= m - 1; ++j) scale *= Rational::factorial(static_cast<unsigned long>(m - j));
        res.H = W.divided_by(x.pow(e)) * scale.inverse();
        break;
    }
    case MHermiteStrategy::GenFun: {
        // n! [k^n] (sum_a c_{m,a} x^a k^a / a!) (sum_b (-1/2)^b k^{2b} / b!)
        MultiPoly H(1);
        for (long b = 0; 2 * b <= n; ++b) {
            long a = n - 2 * b;
            Rational coef = hermite_c(m, a) * Rational(-1, 2).pow(b) /
                            (Rational::factorial(static_cast<unsigned long>(a)) *
                             Rational::factorial(static_cast<unsigned long>(b)));
            H.add_term(Mono::unit(1, 0, static_cast<unsigned>(a)), coef);
        }
        res.H = H * Rational::factorial(static_cast<unsigned long>(n));
        break;
    }
    case MHermiteStrategy::Recurrence: {
        // monic eigenpolynomial: (n-i)(n-i-1-2m) a_i = -(i+2) a_{i+2}
        std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
        a[0] = Rational(1);
        for (long i = 0; i + 2 <= n; i += 2)
            a[static_cast<std::size_t>(i) + 2] =
                Rational(-(n - i) * (n - i - 1 - 2 * m)) * a[static_cast<std::size_t>(i)] /
                Rational(i + 2);
        MultiPoly p(1);
        for (long i = 0; i <= n; ++i)
            p.add_term(Mono::unit(1, 0, static_cast<unsigned>(n - i)),
                       a[static_cast<std::size_t>(i)]);
        res.H = res.c_mn * p;
        break;
    }
    }
    res.monic_part = res.c_mn.is_zero() ? MultiPoly::zero(1) : res.H * res.c_mn.inverse();
    return res;
}

/// Generalized Laguerre polynomial, degree n, leading coefficient (-1)^n/n!.
inline MultiPoly laguerre(unsigned n, const Rational& alpha) {
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly prev = MultiPoly::constant(1, 1);
    if (n == 0) return prev;
    MultiPoly cur = MultiPoly::constant(1, alpha + Rational(1)) - z;
    for (unsigned k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha-z) L_k - (k+alpha) L_{k-1}
        MultiPoly next =
            ((MultiPoly::constant(1, Rational(2 * static_cast<long>(k) + 1) + alpha) - z) * cur -
             (Rational(static_cast<long>(k)) + alpha) * prev) *
            Rational(1, static_cast<long>(k) + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// z L'' + (alpha + 1 - z) L' + n L == 0.
inline bool laguerre_ode_holds(const MultiPoly& L, unsigned n, const Rational& alpha) {
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly d1 = L.derivative(0), d2 = d1.derivative(0);
    MultiPoly lhs = z * d2 + (MultiPoly::constant(1, alpha + Rational(1)) - z) * d1 +
                    Rational(static_cast<long>(n)) * L;
    return lhs.is_zero();
}

enum class LaguerreBranch { Even, Odd };

struct LaguerreReport {
    long m = 0;
    long n = 0;
    LaguerreBranch branch = LaguerreBranch::Even;
    bool proportional = false;
    bool ode_ok = false;
    Rational constant;  // measured: E_n(y) = constant * L_n^{(alpha)}(y/2)
    bool pass() const { return proportional && ode_ok; }
};

/// Even branch: E_n^{(m)}(x^2) = H_{2n}^{(m)}/c_{m,2n} against
/// L_n^{(-m-1/2)}(x^2/2). Odd branch: H_{2n+2m+1}^{(m)}/c = x^{2m+1} G_n(x^2)
/// against L_n^{(m+1/2)}(x^2/2). Records the measured proportionality
/// constant rather than presuming one.
inline LaguerreReport check_laguerre_relation(long m, long n, LaguerreBranch branch) {
    LaguerreReport rep;
    rep.m = m;
    rep.n = n;
    rep.branch = branch;
    MultiPoly x = MultiPoly::variable(1, 0);
    long big_index = branch == LaguerreBranch::Even ? 2 * n : 2 * n + 2 * m + 1;
    MHermite1dResult h = mhermite(m, big_index, MHermiteStrategy::Recurrence);
    MultiPoly reduced = h.monic_part;
    if (branch == LaguerreBranch::Odd)
        reduced = reduced.divided_by(x.pow(static_cast<unsigned>(2 * m + 1)));
    // reduced is even in x; substitute y = x^2
    MultiPoly iny(1);
    for (const auto& [mn, c] : reduced.terms()) {
        if (mn.exp(0) % 2 != 0) throw std::logic_error("laguerre relation: odd exponent");
        iny.add_term(Mono::unit(1, 0, mn.exp(0) / 2), c);
    }
    Rational alpha = branch == LaguerreBranch::Even
                         ? -(Rational(m) + Rational(1, 2))
                         : Rational(m) + Rational(1, 2);
    MultiPoly L = laguerre(static_cast<unsigned>(n), alpha);
    rep.ode_ok = laguerre_ode_holds(L, static_cast<unsigned>(n), alpha);
    // L_n(y/2)
    MultiPoly Lhalf(1);
    for (const auto& [mn, c] : L.terms())
        Lhalf.add_term(mn, c * Rational(1, 2).pow(mn.exp(0)));
    if (Lhalf.is_zero() || iny.is_zero()) return rep;
    rep.constant = iny.leading_term().second / Lhalf.leading_term().second;
    rep.proportional = (iny == rep.constant * Lhalf);
    return rep;
}

struct ProductRuleReport {
    long k = 0;
    bool x2_ok = false;
    bool x3_ok = false;
    bool pass() const { return x2_ok && x3_ok; }
};

/// m = 1 multiplication rules:
///  x^2 H_k = (k-1)/(k+1) H_{k+2} + (2k-1) H_k + k(k-1) H_{k-2}
///  x^3 H_k = (k-1)/(k+2) H_{k+3} + 3(k-1) H_{k+1} + 3k(k-1) H_{k-1}
///            + k(k-1)(k-2) H_{k-3}
inline ProductRuleReport check_m1_product_rules(long k) {
    if (k < 0) throw std::invalid_argument("check_m1_product_rules: k >= 0 required");
    ProductRuleReport rep;
    rep.k = k;
    auto H = [](long idx) {
        return idx < 0 ? MultiPoly::zero(1) : mhermite(1, idx, MHermiteStrategy::Recurrence).H;
    };
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly Hk = H(k);
    MultiPoly lhs2 = x.pow(2) * Hk;
    MultiPoly rhs2 = Rational(k - 1, k + 1) * H(k + 2) + Rational(2 * k - 1) * Hk +
                     Rational(k * (k - 1)) * H(k - 2);
    rep.x2_ok = lhs2 == rhs2;
    MultiPoly lhs3 = x.pow(3) * Hk;
    MultiPoly rhs3 = Rational(k - 1, k + 2) * H(k + 3) + Rational(3 * (k - 1)) * H(k + 1) +
                     Rational(3 * k * (k - 1)) * H(k - 1) +
                     Rational(k * (k - 1) * (k - 2)) * H(k - 3);
    rep.x3_ok = lhs3 == rhs3;
    return rep;
}

/// Eigenvalue operator on the line: -f'' + x f' + (2m/x) f', exact on Q_m.
inline MultiPoly line_trig_eigenop_apply(const MultiPoly& f, long m) {
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly d1 = f.derivative(0);
    MultiPoly r = x * d1 - d1.derivative(0);
    if (m != 0) r += Rational(2 * m) * d1.divided_by(x);
    return r;
}

/// One-variable quasi-invariance: no x^1, x^3, ..., x^{2m-1} terms.
inline bool is_quasi_invariant_1d(const MultiPoly& p, long m) {
    for (const auto& [mn, c] : p.terms()) {
        unsigned e = mn.exp(0);
        if (e % 2 == 1 && e < static_cast<unsigned>(2 * m + 1)) return false;
    }
    return true;
}

/// LaTeX for the H_n^{(m)} table, factored as c * x^{2m+1} * (even part)
/// for odd n and c * (monic part) for even n.
inline std::string mhermite_latex(long m, long n) {
    MHermite1dResult h = mhermite(m, n, MHermiteStrategy::Recurrence);
    std::string name = "H_{" + std::to_string(n) + "}^{(" + std::to_string(m) + ")}";
    if (h.H.is_zero()) return name + " = 0";
    auto poly_tex = [](const MultiPoly& p, const std::string& var) {
        std::string s;
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const auto& [mn, c] = *it;
            Rational a = c.sign() < 0 ? -c : c;
            s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            if (mn.exp(0) >= 1) {
                mono = var;
                if (mn.exp(0) > 1) mono += "^{" + std::to_string(mn.exp(0)) + "}";
            }
            if (mono.empty()) s += a.str();
            else if (a.is_one()) s += mono;
            else s += a.str() + " " + mono;
        }
        return s;
    };
    std::string prefix;
    if (!h.c_mn.is_one()) prefix = h.c_mn.str() + " ";
    MultiPoly body = h.monic_part;
    if (body == MultiPoly::constant(1, 1))
        return name + " = " + h.c_mn.str();
    if (n % 2 == 1) {
        MultiPoly xp = MultiPoly::variable(1, 0).pow(static_cast<unsigned>(2 * m + 1));
        MultiPoly rest = body.divided_by(xp);
        std::string power = "x^{" + std::to_string(2 * m + 1) + "}";
        if (rest == MultiPoly::constant(1, 1)) return name + " = " + prefix + power;
        return name + " = " + prefix + power + " (" + poly_tex(rest, "x") + ")";
    }
    if (body.term_count() == 1 || h.c_mn.is_one())
        return name + " = " + prefix + (prefix.empty() ? poly_tex(body, "x")
                                                       : "(" + poly_tex(body, "x") + ")");
    return name + " = " + prefix + "(" + poly_tex(body, "x") + ")";
}

} // namespace qherm

#endif
