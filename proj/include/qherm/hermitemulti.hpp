#ifndef QHERM_HERMITEMULTI_HPP
#define QHERM_HERMITEMULTI_HPP

#include <algorithm>
#include <vector>

#include "bafn.hpp"
#include "cherednik.hpp"
#include "partitions.hpp"

namespace qherm {

/// Hermitisation H_q = e^{-L/2} q, a finite sum since L lowers degree by 2.
inline MultiPoly hermitise(const MultiPoly& q, const CouplingParams& prm) {
    MultiPoly acc = q, term = q;
    Rational coef(1);
    int k = 0;
    while (!term.is_zero()) {
        try {
            term = cm_apply(term, prm);
        } catch (const NotDivisible&) {
            throw NotQuasiInvariant("hermitise: L left the polynomial ring");
        }
        ++k;
        coef *= Rational(-1, 2) / Rational(k);
        acc += coef * term;
    }
    return acc;
}

/// Inverse map e^{+L/2}.
inline MultiPoly hermitise_inverse(const MultiPoly& q, const CouplingParams& prm) {
    MultiPoly acc = q, term = q;
    Rational coef(1);
    int k = 0;
    while (!term.is_zero()) {
        term = cm_apply(term, prm);
        ++k;
        coef *= Rational(1, 2) / Rational(k);
        acc += coef * term;
    }
    return acc;
}

/// Same polynomial by the uniqueness recurrence 2n H^{(d-2n)} = -L H^{(d-2n+2)};
/// independent code path used as an oracle against hermitise.
inline MultiPoly hermitise_ladder(const MultiPoly& q, const CouplingParams& prm) {
    if (!q.is_homogeneous())
        throw std::invalid_argument("hermitise_ladder: q must be homogeneous");
    MultiPoly acc = q, cur = q;
    int d = q.degree();
    for (int n = 1; 2 * n <= d; ++n) {
        try {
            cur = cm_apply(cur, prm) * Rational(-1, 2 * n);
        } catch (const NotDivisible&) {
            throw NotQuasiInvariant("hermitise_ladder: L left the polynomial ring");
        }
        if (cur.is_zero()) break;
        acc += cur;
    }
    return acc;
}

/// Gaussian conjugation form for symmetric q:
/// H_q = (-1)^d e^{x^2/2} L_q e^{-x^2/2} realized through the Dunkl
/// substitute q(D) acting on the bare Gaussian.
inline MultiPoly hermitise_gaussian(const MultiPoly& q, const CouplingParams& prm) {
    if (!is_symmetric(q)) throw NotSymmetric("hermitise_gaussian: q must be symmetric");
    if (!q.is_homogeneous())
        throw std::invalid_argument("hermitise_gaussian: q must be homogeneous");
    std::size_t N = prm.N;
    SkewElement qD(N);
    std::map<Mono, SkewElement> memo;
    memo.emplace(Mono(N), SkewElement::identity(N));
    auto get = [&](auto&& self, const Mono& e) -> const SkewElement& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        std::size_t i = 0;
        while (e.exp(i) == 0) ++i;
        Mono parent = e;
        parent.set_exp(i, e.exp(i) - 1);
        SkewElement val = dunkl(i, prm).compose(self(self, parent));
        return memo.emplace(e, std::move(val)).first->second;
    };
    for (const auto& [e, c] : q.terms()) qD += c * get(get, e);
    MultiPoly img = qD.gaussian_apply(MultiPoly::constant(N, 1));
    int d = q.degree();
    return d % 2 == 0 ? img : -img;
}

/// Monic Jack polynomial for coupling c (the trigonometric CM coupling),
/// upper triangular over monomial symmetric polynomials in dominance order.
/// Throws PoleAtAlpha when the triangular eigenvalue solve hits a zero pivot.
inline MultiPoly jack_coupling(const Partition& lam, const Rational& c, std::size_t N) {
    if (lam.length() > N)
        throw std::invalid_argument("jack_coupling: partition longer than variable count");
    CouplingParams prm(N, c);
    const DiffOp& H = collapsed_power_sum(GenKind::PolyPower, 2, prm);
    unsigned d = lam.weight();
    std::vector<Partition> mus;
    for (const auto& mu : partitions_of(d, N, d))
        if (dominance_leq(mu, lam)) mus.push_back(mu);
    // descending lex is a linear extension of dominance
    std::sort(mus.begin(), mus.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    auto coeff_of = [&](const MultiPoly& p, const Partition& mu) {
        std::vector<unsigned> e(N, 0);
        std::copy(mu.parts.begin(), mu.parts.end(), e.begin());
        std::sort(e.begin(), e.end(), std::greater<unsigned>());
        return p.coeff(Mono::from_exponents(e));
    };
    // action of H on each m_mu, as coefficients against m_nu
    std::vector<MultiPoly> images;
    images.reserve(mus.size());
    for (const auto& mu : mus) images.push_back(H.apply_poly(monomial_symmetric(N, mu)));
    std::vector<Rational> eig(mus.size());
    for (std::size_t i = 0; i < mus.size(); ++i) eig[i] = coeff_of(images[i], mus[i]);
    std::vector<Rational> a(mus.size(), Rational(0));
    a[0] = Rational(1); // mus[0] == lam
    if (mus.empty() || mus[0] != lam) throw std::logic_error("jack_coupling: ordering broke");
    for (std::size_t t = 1; t < mus.size(); ++t) {
        Rational rhs(0);
        for (std::size_t s = 0; s < t; ++s) {
            if (a[s].is_zero()) continue;
            rhs += a[s] * coeff_of(images[s], mus[t]);
        }
        Rational gap = eig[0] - eig[t];
        if (gap.is_zero()) {
            if (rhs.is_zero()) continue; // decoupled, coefficient stays 0
            throw PoleAtAlpha("jack: eigenvalue collision at " + mus[t].str());
        }
        a[t] = rhs / gap;
    }
    MultiPoly P(N);
    for (std::size_t t = 0; t < mus.size(); ++t)
        if (!a[t].is_zero()) P += a[t] * monomial_symmetric(N, mus[t]);
    // eigenfunction sanity: H P = e(lam) P exactly
    if (H.apply_poly(P) != eig[0] * P) throw EigenCheckFailed("jack: eigen verification failed");
    return P;
}

/// Monic Jack polynomial P_lambda^{(alpha)}; coupling c = -1/alpha.
inline MultiPoly jack(const Partition& lam, const Rational& alpha, std::size_t N) {
    if (alpha.is_zero()) throw std::invalid_argument("jack: alpha must be nonzero");
    return jack_coupling(lam, -alpha.inverse(), N);
}

/// Symmetric m-Hermite polynomial chi_H(P_lambda^{(-1/m)}).
inline MultiPoly symmetric_mhermite(const Partition& lam, long m, std::size_t N) {
    if (m < 0) throw std::invalid_argument("symmetric_mhermite: m >= 0 required");
    CouplingParams prm(N, m);
    MultiPoly P = jack_coupling(lam, Rational(m), N);
    return hermitise(P, prm);
}

/// chi_H intertwines the trigonometric integral of p with its harmonic
/// counterpart on the quasi-invariant q.
inline bool verify_intertwine(const MultiPoly& p, const MultiPoly& q, const CouplingParams& prm) {
    MultiPoly lhs = build_harmonic_integral(p, prm).apply_poly(hermitise(q, prm));
    MultiPoly rhs = hermitise(build_trig_integral(p, prm).apply_poly(q), prm);
    return lhs == rhs;
}

struct JordanReport {
    long l = 0;
    bool eigen_ok = false;    // H_2 (x1 x2)^l = 2 l^2 (x1 x2)^l
    bool offdiag_ok = false;  // H_2 on the partner vector picks up -4 (x1 x2)^l
    bool pass() const { return eigen_ok && offdiag_ok; }
};

/// The 2x2 Jordan block of the trigonometric Hamiltonian at N=2, m=1.
inline JordanReport jordan_block_demo(long l) {
    if (l < 1) throw std::invalid_argument("jordan_block_demo: l >= 1 required");
    JordanReport rep;
    rep.l = l;
    CouplingParams prm(2, 1);
    const DiffOp& H = collapsed_power_sum(GenKind::PolyPower, 2, prm);
    MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    MultiPoly v1 = (x1 * x2).pow(static_cast<unsigned>(l));
    MultiPoly v2 = (x1 * x2).pow(static_cast<unsigned>(l - 1)) * (x1 * x1 + x2 * x2);
    Rational ev(2 * l * l);
    rep.eigen_ok = H.apply_poly(v1) == ev * v1;
    rep.offdiag_ok = H.apply_poly(v2) == ev * v2 - Rational(4) * v1;
    return rep;
}

} // namespace qherm

#endif
