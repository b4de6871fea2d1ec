#ifndef QHERM_HIGHER_HPP
#define QHERM_HIGHER_HPP

#include <vector>

#include "cherednik.hpp"
#include "hermite1d.hpp"

namespace qherm {

/// P_gamma(z) = sum_{j=0}^{l} tau_j z^j of canonical degree l.
struct GammaData {
    unsigned l = 0;
    std::vector<Rational> tau;  // tau[0..l]

    GammaData(unsigned deg, std::vector<Rational> coeffs) : l(deg), tau(std::move(coeffs)) {
        if (tau.size() != l + 1) throw std::invalid_argument("GammaData: need l+1 coefficients");
        if (l > 0 && tau[l].is_zero())
            throw std::invalid_argument("GammaData: leading coefficient must be nonzero");
    }

    static GammaData minus_z() { return GammaData(1, {Rational(0), Rational(-1)}); }
};

/// K_gamma = E + sum_j tau_j L_{j+1}, the lowest-order operator of the
/// gamma-deformed commutative algebra.
inline DiffOp build_Kgamma(const GammaData& g, const CouplingParams& prm) {
    DiffOp K = DiffOp::euler(prm.N);
    for (unsigned j = 0; j <= g.l; ++j) {
        if (g.tau[j].is_zero()) continue;
        K += g.tau[j] * build_rat_integral(power_sum(prm.N, j + 1), prm);
    }
    return K;
}

/// Exact exponential-map image exp(sum_j tau_j/(j+1) L_{j+1}) q; every
/// L_{j+1} strictly lowers degree, so the series is finite.
inline MultiPoly gamma_exp_map(const MultiPoly& q, const GammaData& g,
                               const CouplingParams& prm, int sign = 1) {
    std::vector<DiffOp> lowering;
    std::vector<Rational> weight;
    for (unsigned j = 0; j <= g.l; ++j) {
        if (g.tau[j].is_zero()) continue;
        lowering.push_back(build_rat_integral(power_sum(prm.N, j + 1), prm));
        weight.push_back(Rational(sign) * g.tau[j] / Rational(j + 1));
    }
    MultiPoly acc = q, term = q;
    Rational factor(1);
    int k = 0;
    while (!term.is_zero()) {
        MultiPoly next(prm.N);
        for (std::size_t t = 0; t < lowering.size(); ++t)
            next += weight[t] * lowering[t].apply_poly(term);
        term = std::move(next);
        ++k;
        factor /= Rational(k);
        acc += factor * term;
    }
    return acc;
}

/// P_q^gamma = exp(sum tau_j/(j+1) L_{j+1}) q; eigenfunction of K_gamma
/// with eigenvalue deg q (verified on return).
inline MultiPoly p_gamma(const MultiPoly& q, const GammaData& g, const CouplingParams& prm) {
    if (!q.is_homogeneous()) throw std::invalid_argument("p_gamma: q must be homogeneous");
    MultiPoly P = gamma_exp_map(q, g, prm);
    DiffOp K = build_Kgamma(g, prm);
    if (K.apply_poly(P) != Rational(q.degree() < 0 ? 0 : q.degree()) * P)
        throw EigenCheckFailed("p_gamma: K_gamma eigenvalue check failed");
    return P;
}

/// Gould-Hopper polynomial e^{(tau/(l+1)) d^{l+1}/dx^{l+1}} x^n.
inline MultiPoly gould_hopper(unsigned n, unsigned l, const Rational& tau) {
    MultiPoly p(1);
    Rational base = tau / Rational(l + 1);
    for (unsigned j = 0; n >= j * (l + 1); ++j) {
        unsigned e = n - j * (l + 1);
        Rational coef = base.pow(j) / Rational::factorial(j);
        coef *= Rational::factorial(n) / Rational::factorial(e);
        p.add_term(Mono::unit(1, 0, e), coef);
        if (e < l + 1) break;
    }
    return p;
}

/// Coefficients p_k^l of phi_m(x,lambda) e^{tau lambda^{l+1}/(l+1)}
/// = sum_k p_k^l(x) lambda^k, for k = 0..kmax. The operator product form of
/// phi_m is diagonal on x^n lambda^n/n! with factor c_{m,n}.
inline std::vector<MultiPoly> pkl_series(long m, unsigned l, const Rational& tau, unsigned kmax) {
    if (m < 0) throw std::invalid_argument("pkl_series: m >= 0 required");
    std::vector<MultiPoly> out;
    Rational base = tau / Rational(l + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
        MultiPoly p(1);
        for (unsigned j = 0; k >= j * (l + 1); ++j) {
            unsigned a = k - j * (l + 1);
            Rational coef = hermite_c(m, static_cast<long>(a)) /
                            Rational::factorial(a) * base.pow(j) / Rational::factorial(j);
            p.add_term(Mono::unit(1, 0, a), coef);
            if (a < l + 1) break;
        }
        out.push_back(std::move(p));
    }
    return out;
}

struct BispectralReport {
    long m = 0;
    unsigned l = 0;
    unsigned kmax = 0;
    std::vector<unsigned> x2_failures;
    std::vector<unsigned> x3_failures;
    bool x3_checked = false;
    bool pass() const { return x2_failures.empty() && x3_failures.empty(); }
};

/// The one-dimensional bispectral recurrences:
///  x^2 p_k = (k+2)(k-2m+1) p_{k+2} + tau (l - 2(k-m+1)) p_{k-l+1}
///            + tau^2 p_{k-2l}
/// and, for m = 1,
///  x^3 p_k = (k+3)(k+1)(k-1) p_{k+3}
///            - tau (3k^2 - 3kl + l^2 + 3k - l - 3) p_{k-l+2}
///            + 3 tau^2 (k-l) p_{k-2l+1} - tau^3 p_{k-3l}.
inline BispectralReport check_bispectral_recurrences(long m, unsigned l, const Rational& tau,
                                                     unsigned kmax) {
    BispectralReport rep;
    rep.m = m;
    rep.l = l;
    rep.kmax = kmax;
    auto ps = pkl_series(m, l, tau, kmax + 3 * l + 3);
    auto P = [&](long idx) {
        return (idx < 0 || idx >= static_cast<long>(ps.size())) ? MultiPoly::zero(1)
                                                                : ps[static_cast<std::size_t>(idx)];
    };
    MultiPoly x = MultiPoly::variable(1, 0);
    long L = static_cast<long>(l);
    for (long k = 0; k <= static_cast<long>(kmax); ++k) {
        MultiPoly lhs = x.pow(2) * P(k);
        MultiPoly rhs = Rational((k + 2) * (k - 2 * m + 1)) * P(k + 2) +
                        tau * Rational(L - 2 * (k - m + 1)) * P(k - L + 1) +
                        tau.pow(2) * P(k - 2 * L);
        if (lhs != rhs) rep.x2_failures.push_back(static_cast<unsigned>(k));
    }
    if (m == 1) {
        rep.x3_checked = true;
        for (long k = 0; k <= static_cast<long>(kmax); ++k) {
            MultiPoly lhs = x.pow(3) * P(k);
            MultiPoly rhs =
                Rational((k + 3) * (k + 1) * (k - 1)) * P(k + 3) -
                tau * Rational(3 * k * k - 3 * k * L + L * L + 3 * k - L - 3) * P(k - L + 2) +
                Rational(3) * tau.pow(2) * Rational(k - L) * P(k - 2 * L + 1) -
                tau.pow(3) * P(k - 3 * L);
            if (lhs != rhs) rep.x3_failures.push_back(static_cast<unsigned>(k));
        }
    }
    return rep;
}

} // namespace qherm

#endif
