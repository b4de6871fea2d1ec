#include <catch_amalgamated.hpp>

#include <qherm/higher.hpp>
#include <qherm/quasinv.hpp>

using namespace qherm;

namespace {
MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
}

TEST_CASE("K_gamma special cases") {
    CouplingParams prm(2, 1);
    // P(z) = -z gives E - L
    DiffOp K = build_Kgamma(GammaData::minus_z(), prm);
    CHECK(K == DiffOp::euler(2) - cm_operator(prm));
    // vanishing polynomial gives the Euler operator
    CHECK(build_Kgamma(GammaData(0, {Rational(0)}), prm) == DiffOp::euler(2));
    // one variable, zero coupling, P = tau z^l
    CouplingParams prm1(1, 0);
    GammaData g(2, {Rational(0), Rational(0), Rational(5)});
    DiffOp expect = DiffOp::euler(1);
    expect += Rational(5) * DiffOp::from_term(Mono::unit(1, 0, 3),
                                              RationalFn(MultiPoly::constant(1, 1)));
    CHECK(build_Kgamma(g, prm1) == expect);
}

TEST_CASE("p_gamma eigenfunctions") {
    CouplingParams prm1(1, 0);
    // P = -z reproduces the classical hermites from monomials
    for (unsigned n = 0; n <= 6; ++n) {
        MultiPoly P = p_gamma(var(1, 0).pow(n), GammaData::minus_z(), prm1);
        CHECK(P == classical_hermite(n));
    }
    // l = 2, P = tau z^2: x^3 maps to x^3 + 2 tau
    Rational tau(7, 3);
    GammaData g2(2, {Rational(0), Rational(0), tau});
    CHECK(p_gamma(var(1, 0).pow(3), g2, prm1) ==
          var(1, 0).pow(3) + MultiPoly::constant(1, Rational(2) * tau));
    // degree <= l with tau_0 = 0: all lowering operators annihilate
    CouplingParams prm(2, 1);
    MultiPoly s = var(2, 0) + var(2, 1);
    CHECK(p_gamma(s, g2, prm) == s);
    CHECK(p_gamma(s * s, g2, prm) == s * s);
}

TEST_CASE("K_gamma spectrum matches the euler spectrum on quasi-invariants") {
    CouplingParams prm(2, 1);
    Rational tau(-2, 3);
    std::vector<GammaData> gammas = {
        GammaData::minus_z(),
        GammaData(2, {Rational(0), Rational(0), tau}),
        GammaData(3, {Rational(0), Rational(-1), Rational(0), tau}),
    };
    for (const auto& g : gammas) {
        DiffOp K = build_Kgamma(g, prm);
        for (unsigned d = 0; d <= 6; ++d)
            for (const auto& q : qbasis(2, 1, d)) {
                MultiPoly P = p_gamma(q, g, prm); // verifies the eigenvalue internally
                CHECK(K.apply_poly(P) == Rational(static_cast<long>(d)) * P);
            }
    }
}

TEST_CASE("gamma-deformed generators commute after collapse") {
    CouplingParams prm(2, 1);
    for (const GammaData& g :
         {GammaData::minus_z(), GammaData(2, {Rational(0), Rational(0), Rational(1, 2)})}) {
        // B_i = pi_i + D_i P(D_i)
        std::vector<SkewElement> B;
        for (std::size_t i = 0; i < 2; ++i) {
            SkewElement b = polychronakos(i, prm);
            SkewElement Di = dunkl(i, prm);
            for (unsigned j = 0; j <= g.l; ++j) {
                if (g.tau[j].is_zero()) continue;
                b += g.tau[j] * Di.pow(j + 1);
            }
            B.push_back(b);
        }
        std::vector<DiffOp> gens;
        for (unsigned s = 1; s <= 3; ++s) {
            SkewElement sum(2);
            for (const auto& b : B) sum += b.pow(s);
            gens.push_back(sum.collapse());
        }
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                CHECK(gens[a].commutator(gens[b]).is_zero());
        // the s=1 generator is K_gamma
        CHECK(gens[0] == build_Kgamma(g, prm));
    }
}

TEST_CASE("exp map intertwines trig integrals with their gamma conjugates") {
    CouplingParams prm(2, 1);
    GammaData g(2, {Rational(0), Rational(0), Rational(1, 2)});
    DiffOp A(2);
    for (unsigned j = 0; j <= g.l; ++j) {
        if (g.tau[j].is_zero()) continue;
        A += (g.tau[j] / Rational(j + 1)) * build_rat_integral(power_sum(2, j + 1), prm);
    }
    for (unsigned k = 1; k <= 2; ++k) {
        DiffOp Lp = build_trig_integral(power_sum(2, k), prm);
        for (unsigned d = 0; d <= 6; ++d)
            for (const auto& q : qbasis(2, 1, d)) {
                MultiPoly lhs = gamma_exp_map(Lp.apply_poly(q), g, prm);
                // conjugated operator via the adjoint series, applied to exp-image
                MultiPoly eq = gamma_exp_map(q, g, prm);
                MultiPoly rhs(2);
                DiffOp chain = Lp;
                Rational coef(1);
                rhs += chain.apply_poly(eq);
                for (unsigned t = 1; t <= d; ++t) {
                    chain = A.commutator(chain);
                    coef /= Rational(t);
                    rhs += coef * chain.apply_poly(eq);
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("gould-hopper polynomials") {
    MultiPoly x = var(1, 0);
    Rational tau(5, 2);
    CHECK(gould_hopper(2, 2, tau) == x.pow(2));
    CHECK(gould_hopper(0, 1, tau) == MultiPoly::constant(1, 1));
    CHECK(gould_hopper(4, 1, Rational(-1)) == classical_hermite(4));
    CHECK(gould_hopper(3, 2, tau) == x.pow(3) + MultiPoly::constant(1, Rational(2) * tau));
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(gould_hopper(n, 1, Rational(-1)) == classical_hermite(n));
}

TEST_CASE("pkl series") {
    auto ps = pkl_series(1, 1, Rational(-1), 10);
    for (unsigned k = 0; k <= 10; ++k)
        CHECK(Rational::factorial(k) * ps[k] == mhermite(1, k, MHermiteStrategy::GenFun).H);
    auto p0 = pkl_series(0, 1, Rational(-1), 8);
    for (unsigned k = 0; k <= 8; ++k)
        CHECK(Rational::factorial(k) * p0[k] == classical_hermite(k));
    // vanishing at odd indices below 2m+1 for odd l
    for (long m : {1L, 2L, 3L}) {
        auto pm = pkl_series(m, 1, Rational(2, 3), 8);
        for (long s = 1; s <= m; ++s) CHECK(pm[static_cast<std::size_t>(2 * s - 1)].is_zero());
        CHECK(pkl_series(m, 2, Rational(1), 3)[1].is_zero());
        CHECK(pkl_series(m, 3, Rational(1), 3)[1].is_zero());
    }
}

TEST_CASE("bispectral recurrences") {
    for (long m : {0L, 1L, 2L})
        for (unsigned l : {1u, 2u, 3u}) {
            auto rep = check_bispectral_recurrences(m, l, Rational(-1), 10);
            INFO("m=" << m << " l=" << l);
            CHECK(rep.x2_failures.empty());
            if (m == 1) {
                CHECK(rep.x3_checked);
                CHECK(rep.x3_failures.empty());
            }
        }
    // a non-unit tau as well
    auto rep = check_bispectral_recurrences(1, 2, Rational(3, 4), 8);
    CHECK(rep.pass());
}

TEST_CASE("x2 rule spot value at k=4") {
    // m=1, l=1, tau=-1: x^2 p_4 = 18 p_6 + 7 p_4 + p_2
    auto ps = pkl_series(1, 1, Rational(-1), 8);
    MultiPoly x = var(1, 0);
    CHECK(x.pow(2) * ps[4] == Rational(18) * ps[6] + Rational(7) * ps[4] + ps[2]);
}
