#ifndef QHERM_VERIFY_HPP
#define QHERM_VERIFY_HPP

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

#include "bafn.hpp"
#include "cache.hpp"
#include "deformed.hpp"
#include "hermite1d.hpp"
#include "hermitemulti.hpp"
#include "higher.hpp"

namespace qherm::verify {

struct Check {
    std::string name;
    std::string anchor;  // the identity this check verifies
    bool pass = false;
    std::string detail;  // witness payload on failure, measured values on pass
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

enum class Profile { Desk, Extended };

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ba-axioms", "hermite1d-crosscheck", "laguerre",     "intertwine", "commute",
        "jack",      "jordan",               "gould-hopper", "deformed"};
    return names;
}

namespace detail {

inline MultiPoly upoly(std::initializer_list<std::pair<unsigned, long>> terms) {
    MultiPoly p(1);
    for (const auto& [e, c] : terms) p.add_term(Mono::unit(1, 0, e), Rational(c));
    return p;
}

/// The m = 1 display table H_0 .. H_10, expanded.
inline MultiPoly golden_m1(unsigned n) {
    switch (n) {
    case 0: return upoly({{0, -1}});
    case 1: return MultiPoly::zero(1);
    case 2: return upoly({{2, 1}, {0, 1}});
    case 3: return upoly({{3, 2}});
    case 4: return upoly({{4, 3}, {2, -6}, {0, -3}});
    case 5: return upoly({{5, 4}, {3, -20}});
    case 6: return upoly({{6, 5}, {4, -45}, {2, 45}, {0, 15}});
    case 7: return upoly({{7, 6}, {5, -84}, {3, 210}});
    case 8: return upoly({{8, 7}, {6, -140}, {4, 630}, {2, -420}, {0, -105}});
    case 9: return upoly({{9, 8}, {7, -216}, {5, 1512}, {3, -2520}});
    case 10: return upoly({{10, 9}, {8, -315}, {6, 3150}, {4, -9450}, {2, 4725}, {0, 945}});
    default: throw std::out_of_range("golden_m1");
    }
}

inline MultiPoly classical_golden(unsigned n) {
    switch (n) {
    case 0: return upoly({{0, 1}});
    case 1: return upoly({{1, 1}});
    case 2: return upoly({{2, 1}, {0, -1}});
    case 3: return upoly({{3, 1}, {1, -3}});
    case 4: return upoly({{4, 1}, {2, -6}, {0, 3}});
    case 5: return upoly({{5, 1}, {3, -10}, {1, 15}});
    default: throw std::out_of_range("classical_golden");
    }
}

inline std::vector<MultiPoly> quasi_basis_upto(std::size_t N, long m, unsigned dmax) {
    std::vector<MultiPoly> out;
    for (unsigned d = 0; d <= dmax; ++d)
        for (auto& q : qbasis(N, m, d)) out.push_back(std::move(q));
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// criterion checks
// ---------------------------------------------------------------------------

/// Criterion 1: H_n^{(1)}, n = 0..10, equals the display table exactly.
inline Check golden_table_check() {
    Check c{"m-hermite golden table", "H_n^{(1)} n=0..10 equals the display table", true, ""};
    for (unsigned n = 0; n <= 10; ++n) {
        auto h = mhermite(1, n, MHermiteStrategy::Wronskian);
        if (h.H != detail::golden_m1(n)) {
            c.pass = false;
            c.detail += "mismatch at n=" + std::to_string(n) + ": got " + h.H.str() + "; ";
        }
    }
    return c;
}

/// Criterion 2: three constructions agree for m <= 3, n <= 12, and the
/// classical table H_0..H_5 matches.
inline Check cross_construction_check() {
    Check c{"cross-construction",
            "wronskian == genfun == recurrence (m<=3, n<=12); classical H_0..H_5", true, ""};
    for (long m = 0; m <= 3 && c.pass; ++m)
        for (long n = 0; n <= 12; ++n) {
            auto w = mhermite(m, n, MHermiteStrategy::Wronskian);
            auto g = mhermite(m, n, MHermiteStrategy::GenFun);
            auto r = mhermite(m, n, MHermiteStrategy::Recurrence);
            if (w.H != g.H || g.H != r.H) {
                c.pass = false;
                c.detail = "strategy mismatch at m=" + std::to_string(m) +
                           " n=" + std::to_string(n);
                break;
            }
        }
    for (unsigned n = 0; n <= 5 && c.pass; ++n)
        if (classical_hermite(n) != detail::classical_golden(n)) {
            c.pass = false;
            c.detail = "classical table mismatch at n=" + std::to_string(n);
        }
    return c;
}

/// Criterion 3: monic parts have integer coefficients, m <= 3, n <= 20.
inline Check integrality_check() {
    Check c{"integrality", "p_n^{(m)} has integer coefficients (m<=3, n<=20)", true, ""};
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 20; ++n) {
            auto h = mhermite(m, n, MHermiteStrategy::Recurrence);
            if (h.c_mn.is_zero()) continue;
            if (h.H != h.c_mn * h.monic_part ||
                h.monic_part.leading_term().second != Rational(1)) {
                c.pass = false;
                c.detail = "monic factorization broke at m=" + std::to_string(m) +
                           " n=" + std::to_string(n);
                return c;
            }
            for (const auto& [mn, coef] : h.monic_part.terms())
                if (!coef.is_integer()) {
                    c.pass = false;
                    c.detail = "non-integer coefficient at m=" + std::to_string(m) +
                               " n=" + std::to_string(n) + ": " + coef.str();
                    return c;
                }
        }
    return c;
}

/// Criterion 4: Laguerre relations on both branches, m <= 3, n <= 8;
/// the measured proportionality constant is recorded.
inline Check laguerre_check() {
    Check c{"laguerre relations",
            "E_n^{(m)}(x^2) ~ L_n^{(-m-1/2)}(x^2/2), x^{2m+1} G_n^{(m)}(x^2) ~ "
            "x^{2m+1} L_n^{(m+1/2)}(x^2/2), both solving the Laguerre ODE",
            true, ""};
    bool constant_uniform = true;
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 8; ++n)
            for (auto branch : {LaguerreBranch::Even, LaguerreBranch::Odd}) {
                auto rep = check_laguerre_relation(m, n, branch);
                if (!rep.pass()) {
                    c.pass = false;
                    c.detail += "failure at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                (branch == LaguerreBranch::Even ? " even" : " odd") + "; ";
                }
                Rational expected = Rational(-2).pow(n) * Rational::factorial(
                                                              static_cast<unsigned long>(n));
                if (rep.constant != expected) constant_uniform = false;
            }
    if (c.pass)
        c.detail = std::string("measured constant is (-2)^n n!") +
                   (constant_uniform ? "" : " -- NOT uniform, see failures");
    if (!constant_uniform) c.pass = false;
    return c;
}

/// Criterion 5: BA axioms, Schroedinger equation, symmetry, and the
/// x/lambda symmetry of the trig integrals for the desk instances.
inline Check ba_axioms_check(Profile profile) {
    Check c{"ba axioms",
            "phi = P e^{(x,l)}: leading term, odd-derivative vanishing, L phi = l^2 phi, "
            "P(x,l) = P(l,x), and L_{p,x} phi = L_{p,l} phi for p_1, p_2",
            true, ""};
    std::vector<std::pair<std::size_t, long>> instances = {{2, 1}, {2, 2}, {3, 1}};
    if (profile == Profile::Extended) instances.push_back({3, 2});
    for (auto [N, m] : instances) {
        BAFunction ba = berest_ba(CouplingParams(N, m));
        auto rep = check_axioms(ba);
        if (!rep.pass()) {
            c.pass = false;
            for (const auto& f : rep.failures)
                c.detail += "N=" + std::to_string(N) + " m=" + std::to_string(m) + ": " + f + "; ";
        }
        for (unsigned k = 1; k <= 2; ++k) {
            if (!check_Lq_eigen(ba, power_sum(N, k))) {
                c.pass = false;
                c.detail += "L_q eigen fails for p_" + std::to_string(k) + " at N=" +
                            std::to_string(N) + " m=" + std::to_string(m) + "; ";
            }
            if (!check_trig_symmetry(ba, power_sum(N, k))) {
                c.pass = false;
                c.detail += "trig symmetry fails for p_" + std::to_string(k) + " at N=" +
                            std::to_string(N) + " m=" + std::to_string(m) + "; ";
            }
        }
    }
    return c;
}

/// Criterion 13: the dual-basis expansion matches the BA function through
/// degree 6 at N=2, m=1.
inline Check expansion_check(CacheStore* cache) {
    Check c{"expansion vs dual bases",
            "bidegree-(d,d) slices of P e^{(x,l)} equal sum_i q_i(x) q^i(l), d <= 6", true, ""};
    CouplingParams prm(2, 1);
    BAFunction ba = berest_ba(prm);
    GradedBasis gb;
    gb.N = 2;
    gb.m = 1;
    gb.phi00 = ba.phi00;
    for (unsigned d = 0; d <= 6; ++d)
        gb.levels[d] = cache ? cache->level(prm, d, ba.phi00) : build_graded_level(prm, d, ba.phi00);
    auto rep = expansion_vs_dual(ba, gb, 6);
    c.pass = rep.pass();
    for (unsigned d : rep.mismatched_degrees)
        c.detail += "mismatch at degree " + std::to_string(d) + "; ";
    return c;
}

/// Criterion 6: collapse identities for the three displayed generators.
inline Check collapse_check() {
    Check c{"collapse identities",
            "collapse(sum pi_i) = E, collapse(sum pi_i^2) = H_N, collapse(sum D_i^2) = L",
            true, ""};
    for (std::size_t N : {2u, 3u}) {
        CouplingParams prm(N, 1);
        SkewElement sum_pi(N), sum_pi2(N), sum_D2(N);
        for (std::size_t i = 0; i < N; ++i) {
            SkewElement pi = polychronakos(i, prm);
            SkewElement Di = dunkl(i, prm);
            sum_pi += pi;
            sum_pi2 += pi.compose(pi);
            sum_D2 += Di.compose(Di);
        }
        if (sum_pi.collapse() != DiffOp::euler(N)) {
            c.pass = false;
            c.detail += "euler identity fails at N=" + std::to_string(N) + "; ";
        }
        if (sum_pi2.collapse() != trig_cm_operator(prm)) {
            c.pass = false;
            c.detail += "trig hamiltonian identity fails at N=" + std::to_string(N) + "; ";
        }
        if (sum_D2.collapse() != cm_operator(prm)) {
            c.pass = false;
            c.detail += "cm operator identity fails at N=" + std::to_string(N) + "; ";
        }
    }
    return c;
}

/// Criterion 7: the commutator series gives E - L for the momentum, and for
/// p_2 agrees with the conjugation realization on quasi-invariants.
inline Check bch_check() {
    Check c{"commutator series vs conjugation",
            "L^H_{p_1} = E - L; L^H_{p_2} q = e^{-L/2} L_{p_2} e^{L/2} q, deg q <= 6", true, ""};
    for (std::size_t N : {2u, 3u}) {
        CouplingParams prm(N, 1);
        if (build_harmonic_integral(power_sum(N, 1), prm) !=
            DiffOp::euler(N) - cm_operator(prm)) {
            c.pass = false;
            c.detail += "momentum case fails at N=" + std::to_string(N) + "; ";
        }
    }
    CouplingParams prm(2, 1);
    DiffOp H2 = build_harmonic_integral(power_sum(2, 2), prm);
    DiffOp L2 = build_trig_integral(power_sum(2, 2), prm);
    for (const auto& q : detail::quasi_basis_upto(2, 1, 6)) {
        MultiPoly up = q, term = q;
        Rational coef(1);
        int k = 0;
        while (!term.is_zero()) {
            term = cm_apply(term, prm);
            ++k;
            coef *= Rational(1, 2) / Rational(k);
            up += coef * term;
        }
        MultiPoly down = L2.apply_poly(up);
        term = down;
        coef = Rational(1);
        k = 0;
        MultiPoly acc = down;
        while (!term.is_zero()) {
            term = cm_apply(term, prm);
            ++k;
            coef *= Rational(-1, 2) / Rational(k);
            acc += coef * term;
        }
        if (H2.apply_poly(q) != acc) {
            c.pass = false;
            c.detail += "conjugation mismatch on " + q.str() + "; ";
            break;
        }
    }
    return c;
}

/// Criterion 8: the intertwining of trig and harmonic integrals across the
/// full quasi-invariant basis.
inline Check intertwine_check(std::size_t N, unsigned dmax) {
    Check c{"intertwining N=" + std::to_string(N),
            "L^H_p(e^{-L/2} q) = e^{-L/2}(L_p q) for p_1, p_2, p_3, deg q <= " +
                std::to_string(dmax),
            true, ""};
    CouplingParams prm(N, 1);
    std::vector<DiffOp> trig, harm;
    for (unsigned k = 1; k <= 3; ++k) {
        trig.push_back(build_trig_integral(power_sum(N, k), prm));
        harm.push_back(build_harmonic_integral(power_sum(N, k), prm));
    }
    for (const auto& q : detail::quasi_basis_upto(N, 1, dmax)) {
        MultiPoly hq = hermitise(q, prm);
        for (unsigned k = 0; k < 3; ++k) {
            MultiPoly lhs = harm[k].apply_poly(hq);
            MultiPoly rhs = hermitise(trig[k].apply_poly(q), prm);
            if (lhs != rhs) {
                c.pass = false;
                c.detail += "p_" + std::to_string(k + 1) + " fails on " + q.str() + "; ";
            }
        }
    }
    return c;
}

/// Criterion 9: commutativity of the harmonic integrals, including one
/// non-integer coupling.
inline Check commute_check() {
    Check c{"harmonic integrals commute",
            "[L^H_{p_i}, L^H_{p_j}] = 0, i,j <= 3, couplings 1, 2, 1/2", true, ""};
    for (Rational coup : {Rational(1), Rational(2), Rational(1, 2)}) {
        CouplingParams prm(2, coup);
        std::vector<DiffOp> ops;
        for (unsigned k = 1; k <= 3; ++k)
            ops.push_back(build_harmonic_integral(power_sum(2, k), prm));
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j)
                if (!ops[i].commutator(ops[j]).is_zero()) {
                    c.pass = false;
                    c.detail += "nonzero commutator (p_" + std::to_string(i + 1) + ", p_" +
                                std::to_string(j + 1) + ") at coupling " + coup.str() + "; ";
                }
    }
    return c;
}

/// Criterion 10a: the harmonic hamiltonian eigen-equation on hermitised
/// bases to degree 8.
inline Check hermite_eigen_check() {
    Check c{"harmonic eigen equations",
            "(L - E) e^{-L/2} q = -(deg q) e^{-L/2} q, deg q <= 8", true, ""};
    for (std::size_t N : {2u, 3u}) {
        CouplingParams prm(N, 1);
        DiffOp LH = harmonic_cm_operator(prm);
        for (unsigned d = 0; d <= 8; ++d)
            for (const auto& q : qbasis(N, 1, d)) {
                MultiPoly h = hermitise(q, prm);
                if (LH.apply_poly(h) != Rational(-static_cast<long>(d)) * h) {
                    c.pass = false;
                    c.detail += "eigen fails at N=" + std::to_string(N) + " on " + q.str() + "; ";
                }
            }
    }
    return c;
}

/// Criterion 10b: K_gamma eigen-equations for three gamma polynomials on
/// bases to degree 6.
inline Check kgamma_eigen_check() {
    Check c{"K_gamma eigen equations",
            "K_gamma P^gamma_q = (deg q) P^gamma_q for P(z) in {-z, t z^2, -z + t z^3}",
            true, ""};
    CouplingParams prm(2, 1);
    Rational tau(1, 2);
    std::vector<GammaData> gammas = {
        GammaData::minus_z(),
        GammaData(2, {Rational(0), Rational(0), tau}),
        GammaData(3, {Rational(0), Rational(-1), Rational(0), tau}),
    };
    for (const auto& g : gammas)
        for (const auto& q : detail::quasi_basis_upto(2, 1, 6)) {
            try {
                p_gamma(q, g, prm);
            } catch (const EigenCheckFailed&) {
                c.pass = false;
                c.detail += "eigen check failed on " + q.str() + "; ";
            }
        }
    return c;
}

/// Criterion 16: zero-coupling hermitisation factors into classical
/// Hermite polynomials.
inline Check product_hermite_check() {
    Check c{"zero-coupling sanity",
            "e^{-Delta/2} x^mu = prod H_{mu_i}(x_i), |mu| <= 6, N <= 3", true, ""};
    for (std::size_t N : {1u, 2u, 3u}) {
        CouplingParams prm(N, 0);
        std::vector<unsigned> mu(N, 0);
        auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
            if (i == N) {
                MultiPoly mono = MultiPoly::constant(N, 1);
                MultiPoly prod = MultiPoly::constant(N, 1);
                for (std::size_t t = 0; t < N; ++t) {
                    mono = mono * MultiPoly::variable(N, t).pow(mu[t]);
                    prod = prod * classical_hermite(mu[t]).remapped({t}, N);
                }
                if (hermitise(mono, prm) != prod) {
                    c.pass = false;
                    c.detail += "mismatch at mu=" + mono.str() + "; ";
                }
                return;
            }
            for (unsigned k = 0; k <= left; ++k) {
                mu[i] = k;
                self(self, i + 1, left - k);
            }
            mu[i] = 0;
        };
        rec(rec, 0, 6);
    }
    return c;
}

/// Criterion 11: the (3,1) Jack display coefficients and the m=1 pole.
inline Check jack_check() {
    Check c{"jack specialization",
            "P_{(3,1)}^{(-1/m)} = m_{31} + 2m/(m-1) m_{22} + m(5m-3)/(m-1)^2 m_{211} + "
            "12m^2/(m-1)^2 m_{1111}; pole at m=1",
            true, ""};
    auto coeff_at = [&](const MultiPoly& P, const Partition& mu) {
        std::vector<unsigned> e(4, 0);
        std::copy(mu.parts.begin(), mu.parts.end(), e.begin());
        std::sort(e.begin(), e.end(), std::greater<unsigned>());
        return P.coeff(Mono::from_exponents(e));
    };
    for (long m : {2L, 3L}) {
        MultiPoly P = jack(Partition{3, 1}, Rational(-1, m), 4);
        Rational c22(2 * m, m - 1);
        Rational c211 = Rational(m * (5 * m - 3)) / Rational((m - 1) * (m - 1));
        Rational c1111 = Rational(12 * m * m) / Rational((m - 1) * (m - 1));
        if (coeff_at(P, Partition{3, 1}) != Rational(1) || coeff_at(P, Partition{2, 2}) != c22 ||
            coeff_at(P, Partition{2, 1, 1}) != c211 ||
            coeff_at(P, Partition{1, 1, 1, 1}) != c1111) {
            c.pass = false;
            c.detail += "coefficients mismatch at m=" + std::to_string(m) + "; ";
        }
    }
    bool poled = false;
    try {
        jack(Partition{3, 1}, Rational(-1, 1), 4);
    } catch (const PoleAtAlpha&) {
        poled = true;
    }
    if (!poled) {
        c.pass = false;
        c.detail += "pole at m=1 not reported; ";
    } else {
        c.detail += "pole at m=1 reported as PoleAtAlpha; ";
    }
    return c;
}

/// Criterion 12: the 2x2 Jordan block identities for l = 1..l_max.
inline Check jordan_check(long l_max = 4) {
    Check c{"jordan block",
            "H_2 (x1 x2)^l = 2l^2 (x1 x2)^l and H_2 on the partner adds -4 (x1 x2)^l",
            true, ""};
    for (long l = 1; l <= l_max; ++l) {
        auto rep = jordan_block_demo(l);
        if (!rep.pass()) {
            c.pass = false;
            c.detail += "fails at l=" + std::to_string(l) + "; ";
        }
    }
    return c;
}

/// Criterion 14: the one-dimensional bispectral recurrences and the pkl
/// bridge to the m-Hermite table.
inline Check bispectral_check() {
    Check c{"bispectral recurrences",
            "x^2 and x^3 lattice recurrences for p_k^l; k! p_k^1 = H_k^{(1)} at tau=-1",
            true, ""};
    for (long m : {0L, 1L, 2L})
        for (unsigned l : {1u, 2u, 3u}) {
            auto rep = check_bispectral_recurrences(m, l, Rational(-1), 10);
            if (!rep.x2_failures.empty() || (m == 1 && !rep.x3_failures.empty())) {
                c.pass = false;
                c.detail += "recurrence fails at m=" + std::to_string(m) +
                            " l=" + std::to_string(l) + "; ";
            }
        }
    auto ps = pkl_series(1, 1, Rational(-1), 10);
    for (unsigned k = 0; k <= 10; ++k)
        if (Rational::factorial(k) * ps[k] != mhermite(1, k, MHermiteStrategy::Wronskian).H) {
            c.pass = false;
            c.detail += "k! p_k^1 != H_k^{(1)} at k=" + std::to_string(k) + "; ";
        }
    return c;
}

/// Gould-Hopper specialization sanity.
inline Check gould_hopper_check() {
    Check c{"gould-hopper specialization",
            "e^{(t/(l+1)) d^{l+1}} x^n: below-threshold fixpoints and the hermite case l=1, t=-1",
            true, ""};
    Rational tau(3, 5);
    for (unsigned l : {1u, 2u, 3u})
        for (unsigned n = 0; n < l + 1; ++n)
            if (gould_hopper(n, l, tau) != MultiPoly::variable(1, 0).pow(n)) {
                c.pass = false;
                c.detail += "fixpoint fails at n=" + std::to_string(n) + " l=" + std::to_string(l) + "; ";
            }
    for (unsigned n = 0; n <= 10; ++n)
        if (gould_hopper(n, 1, Rational(-1)) != classical_hermite(n)) {
            c.pass = false;
            c.detail += "hermite case fails at n=" + std::to_string(n) + "; ";
        }
    return c;
}

/// Criterion 15: the deformed operators, restriction routes, eigen
/// identity and membership preservation.
inline Check deformed_check() {
    Check c{"deformed correspondence",
            "L_{1,1} p_2 = 0; Dunkl restriction routes match the deformed operators; "
            "(E-L) chi(f) = (deg f) chi(f); Lambda(k) membership preserved",
            true, ""};
    for (Rational k : {Rational(2), Rational(3), Rational(1, 2)}) {
        DeformedParams dp(1, 1, k);
        if (!apply_deformed(DeformedOp::RationalL, deformed_newton(2, dp), dp).is_zero()) {
            c.pass = false;
            c.detail += "L_{1,1} p_2 != 0 at k=" + k.str() + "; ";
        }
        auto rep = verify_deformed_correspondence(dp, 6);
        if (!rep.pass()) {
            c.pass = false;
            for (const auto& f : rep.failures) c.detail += "k=" + k.str() + ": " + f + "; ";
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

inline Suite run_suite(const std::string& name, Profile profile, CacheStore* cache = nullptr) {
    Suite s;
    s.name = name;
    if (name == "ba-axioms") {
        s.checks.push_back(ba_axioms_check(profile));
        s.checks.push_back(expansion_check(cache));
    } else if (name == "hermite1d-crosscheck") {
        s.checks.push_back(golden_table_check());
        s.checks.push_back(cross_construction_check());
        s.checks.push_back(integrality_check());
    } else if (name == "laguerre") {
        s.checks.push_back(laguerre_check());
    } else if (name == "intertwine") {
        s.checks.push_back(intertwine_check(2, 6));
        s.checks.push_back(intertwine_check(3, 6));
        s.checks.push_back(hermite_eigen_check());
        s.checks.push_back(product_hermite_check());
    } else if (name == "commute") {
        s.checks.push_back(collapse_check());
        s.checks.push_back(bch_check());
        s.checks.push_back(commute_check());
    } else if (name == "jack") {
        s.checks.push_back(jack_check());
    } else if (name == "jordan") {
        s.checks.push_back(jordan_check(profile == Profile::Extended ? 6 : 4));
    } else if (name == "gould-hopper") {
        s.checks.push_back(gould_hopper_check());
        s.checks.push_back(bispectral_check());
        s.checks.push_back(kgamma_eigen_check());
    } else if (name == "deformed") {
        s.checks.push_back(deformed_check());
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return s;
}

inline std::vector<Suite> run_all(Profile profile, CacheStore* cache = nullptr) {
    std::vector<Suite> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, profile, cache));
    return out;
}

/// Deterministic machine-readable report; no timestamps so repeated runs
/// are byte-identical.
inline nlohmann::json report_json(const std::vector<Suite>& suites, Profile profile) {
    nlohmann::json j;
    j["profile"] = profile == Profile::Desk ? "desk" : "extended";
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json js;
        js["suite"] = s.name;
        js["pass"] = s.pass();
        all = all && s.pass();
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : s.checks) {
            checks.push_back({{"name", c.name},
                              {"anchor", c.anchor},
                              {"pass", c.pass},
                              {"detail", c.detail}});
        }
        js["checks"] = std::move(checks);
        arr.push_back(std::move(js));
    }
    j["suites"] = std::move(arr);
    j["pass"] = all;
    return j;
}

} // namespace qherm::verify

#endif
