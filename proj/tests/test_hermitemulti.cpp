#include <catch_amalgamated.hpp>

#include <qherm/hermite1d.hpp>
#include <qherm/hermitemulti.hpp>

using namespace qherm;

namespace {
MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
}

TEST_CASE("hermitise spot values") {
    CouplingParams prm(2, 1);
    MultiPoly s = var(2, 0) + var(2, 1), u = var(2, 0) - var(2, 1);
    CHECK(hermitise(s.pow(2), prm) == s.pow(2) - MultiPoly::constant(2, Rational(2)));
    CHECK(hermitise(u.pow(2), prm) == u.pow(2) + MultiPoly::constant(2, Rational(2)));
    CHECK(hermitise(MultiPoly::constant(2, 1), prm) == MultiPoly::constant(2, 1));
    CHECK_THROWS_AS(hermitise(u, prm), NotQuasiInvariant);
}

TEST_CASE("hermitisation at m=0 is a product of classical hermites") {
    for (std::size_t N : {2u, 3u}) {
        CouplingParams prm(N, 0);
        std::vector<unsigned> mu(N, 0);
        auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
            if (i == N) {
                MultiPoly mono = MultiPoly::constant(N, 1);
                MultiPoly prod = MultiPoly::constant(N, 1);
                for (std::size_t t = 0; t < N; ++t) {
                    mono = mono * var(N, t).pow(mu[t]);
                    prod = prod * classical_hermite(mu[t]).remapped({t}, N);
                }
                CHECK(hermitise(mono, prm) == prod);
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
}

TEST_CASE("ladder and gaussian routes agree with the heat flow") {
    CouplingParams prm(2, 1);
    for (unsigned d = 0; d <= 6; ++d) {
        for (const auto& q : qbasis(2, 1, d)) {
            MultiPoly h = hermitise(q, prm);
            CHECK(hermitise_ladder(q, prm) == h);
            if (is_symmetric(q)) CHECK(hermitise_gaussian(q, prm) == h);
        }
        for (const auto& mu : partitions_of(d, 2, d)) {
            MultiPoly f = monomial_symmetric(2, mu);
            if (f.is_zero()) continue;
            CHECK(hermitise_gaussian(f, prm) == hermitise(f, prm));
        }
    }
}

TEST_CASE("gaussian route spot values") {
    CouplingParams prm2(2, 1);
    MultiPoly s = var(2, 0) + var(2, 1);
    CHECK(hermitise_gaussian(s, prm2) == s);
    CouplingParams prm0(2, 0);
    MultiPoly p2 = power_sum(2, 2);
    CHECK(hermitise_gaussian(p2, prm0) == p2 - MultiPoly::constant(2, Rational(2)));
    CHECK_THROWS_AS(hermitise_gaussian(var(2, 0), prm2), NotSymmetric);
}

TEST_CASE("hermitise inverts") {
    CouplingParams prm(2, 1);
    for (unsigned d = 0; d <= 6; ++d)
        for (const auto& q : qbasis(2, 1, d)) {
            MultiPoly h = hermitise(q, prm);
            CHECK(hermitise_inverse(h, prm) == q);
            CHECK(is_quasi_invariant(h, 1));
            CHECK(h.homogeneous_part(static_cast<int>(d)) == q); // top part preserved
        }
}

TEST_CASE("genfun route equals the heat flow on the full basis") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    CouplingParams prm(2, 1);
    for (unsigned d = 0; d <= 6; ++d)
        for (const auto& q : qbasis(2, 1, d))
            CHECK(hermite_from_genfun(ba, q) == hermitise(q, prm));
}

TEST_CASE("eigen equation for the harmonic hamiltonian") {
    for (std::size_t N : {2u, 3u}) {
        CouplingParams prm(N, 1);
        DiffOp LH = harmonic_cm_operator(prm); // L - E
        unsigned dmax = 8;
        for (unsigned d = 0; d <= dmax; ++d)
            for (const auto& q : qbasis(N, 1, d)) {
                MultiPoly h = hermitise(q, prm);
                CHECK(LH.apply_poly(h) == Rational(-static_cast<long>(d)) * h);
            }
    }
}

TEST_CASE("jack polynomials") {
    CHECK(jack_coupling(Partition{1}, Rational(5), 2) == monomial_symmetric(2, Partition{1}));
    // P_(2) at alpha = -1/m has coefficient 2m/(m-1) on m_(1,1)
    for (long m : {2L, 3L, 5L}) {
        MultiPoly P = jack(Partition{2}, Rational(-1, m), 2);
        MultiPoly expect = monomial_symmetric(2, Partition{2}) +
                           Rational(2 * m, m - 1) * monomial_symmetric(2, Partition{1, 1});
        CHECK(P == expect);
    }
    CHECK_THROWS_AS(jack(Partition{2}, Rational(-1, 1), 2), PoleAtAlpha);
}

TEST_CASE("jack (3,1) display coefficients") {
    auto coeffs = [](long m) {
        MultiPoly P = jack(Partition{3, 1}, Rational(-1, m), 4);
        auto at = [&](const Partition& mu) {
            std::vector<unsigned> e(4, 0);
            std::copy(mu.parts.begin(), mu.parts.end(), e.begin());
            std::sort(e.begin(), e.end(), std::greater<unsigned>());
            return P.coeff(Mono::from_exponents(e));
        };
        return std::vector<Rational>{at(Partition{3, 1}), at(Partition{2, 2}),
                                     at(Partition{2, 1, 1}), at(Partition{1, 1, 1, 1})};
    };
    auto c2 = coeffs(2);
    CHECK(c2[0] == Rational(1));
    CHECK(c2[1] == Rational(4));
    CHECK(c2[2] == Rational(14));
    CHECK(c2[3] == Rational(48));
    auto c3 = coeffs(3);
    CHECK(c3[0] == Rational(1));
    CHECK(c3[1] == Rational(3));
    CHECK(c3[2] == Rational(9));
    CHECK(c3[3] == Rational(27));
    CHECK_THROWS_AS(jack(Partition{3, 1}, Rational(-1, 1), 4), PoleAtAlpha);
}

TEST_CASE("jack triangularity in dominance order") {
    // generic coupling, no eigenvalue collisions
    for (const Partition& lam : {Partition{3, 1}, Partition{2, 2}, Partition{4}}) {
        MultiPoly P = jack(lam, Rational(3), 4);
        // every monomial's sorted exponent vector must be dominated by lam
        for (const auto& [mn, c] : P.terms()) {
            auto e = mn.exponents();
            std::sort(e.begin(), e.end(), std::greater<unsigned>());
            while (!e.empty() && e.back() == 0) e.pop_back();
            CHECK(dominance_leq(Partition(e), lam));
        }
    }
}

TEST_CASE("symmetric m-hermite polynomials") {
    for (long m : {0L, 1L, 2L}) {
        MultiPoly H = symmetric_mhermite(Partition{1}, m, 2);
        CHECK(H == power_sum(2, 1));
    }
    CouplingParams prm(2, 2);
    MultiPoly expect = hermitise(monomial_symmetric(2, Partition{2}) +
                                     Rational(4) * monomial_symmetric(2, Partition{1, 1}),
                                 prm);
    CHECK(symmetric_mhermite(Partition{2}, 2, 2) == expect);
    // L^H eigen equation with eigenvalue -|lambda|; (lam, m) chosen off the
    // alpha = -1/m pole set (e.g. (3) at m=2 in two variables is a pole)
    auto eigen_check = [](const Partition& lam, long m) {
        MultiPoly H = symmetric_mhermite(lam, m, 2);
        CouplingParams pm(2, m);
        CHECK(harmonic_cm_operator(pm).apply_poly(H) ==
              Rational(-static_cast<long>(lam.weight())) * H);
    };
    eigen_check(Partition{2}, 2);
    eigen_check(Partition{2, 1}, 2);
    eigen_check(Partition{2}, 3);
    eigen_check(Partition{2, 1}, 3);
    eigen_check(Partition{3}, 3);
    // and (3) at m=2, N=2 really is a pole
    CHECK_THROWS_AS(symmetric_mhermite(Partition{3}, 2, 2), PoleAtAlpha);
    // m = 0: hermitisation of the monomial symmetric polynomial itself
    MultiPoly H0 = symmetric_mhermite(Partition{2, 1}, 0, 2);
    CHECK(H0 == hermitise(monomial_symmetric(2, Partition{2, 1}), CouplingParams(2, 0)));
}

TEST_CASE("intertwining of trig and harmonic integrals") {
    CouplingParams prm(2, 1);
    // hand value: p = p_1, q = (x1+x2)^2
    MultiPoly s2 = (var(2, 0) + var(2, 1)).pow(2);
    MultiPoly lhs = build_harmonic_integral(power_sum(2, 1), prm).apply_poly(hermitise(s2, prm));
    CHECK(lhs == Rational(2) * (s2 - MultiPoly::constant(2, Rational(2))));
    CHECK(verify_intertwine(power_sum(2, 1), s2, prm));
    // q = 1 for arbitrary p
    CHECK(verify_intertwine(power_sum(2, 3), MultiPoly::constant(2, 1), prm));
    // non-symmetric quasi-invariant witness
    MultiPoly u3 = (var(2, 0) - var(2, 1)).pow(3);
    CHECK(verify_intertwine(power_sum(2, 2), u3, prm));
    // full basis sweep at N=2 for the first three power sums
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned d = 0; d <= 6; ++d)
            for (const auto& q : qbasis(2, 1, d))
                CHECK(verify_intertwine(power_sum(2, k), q, prm));
    // N=3 spot checks (the acceptance suite runs the full sweep)
    CouplingParams prm3(3, 1);
    for (unsigned d = 0; d <= 4; ++d)
        for (const auto& q : qbasis(3, 1, d)) {
            CHECK(verify_intertwine(power_sum(3, 1), q, prm3));
            CHECK(verify_intertwine(power_sum(3, 2), q, prm3));
        }
}

TEST_CASE("jordan block of the trigonometric hamiltonian") {
    for (long l = 1; l <= 4; ++l) {
        auto rep = jordan_block_demo(l);
        CHECK(rep.eigen_ok);
        CHECK(rep.offdiag_ok);
    }
    // the symmetric eigenvector alone
    CouplingParams prm(2, 1);
    MultiPoly v = var(2, 0) * var(2, 1);
    CHECK(trig_cm_operator(prm).apply_poly(v) == Rational(2) * v);
}
