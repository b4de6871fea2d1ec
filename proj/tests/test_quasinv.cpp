#include <catch_amalgamated.hpp>

#include <qherm/hermitemulti.hpp>
#include <qherm/quasinv.hpp>

using namespace qherm;

namespace {
MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
}

TEST_CASE("quasi-invariance tester") {
    MultiPoly x1 = var(2, 0), x2 = var(2, 1);
    CHECK(is_quasi_invariant(x1 + x2, 0));
    CHECK(is_quasi_invariant(x1 + x2, 1));
    CHECK(is_quasi_invariant(x1 + x2, 3));
    CHECK_FALSE(is_quasi_invariant(x1 - x2, 1));
    CHECK(is_quasi_invariant((x1 - x2).pow(3), 1));
    CHECK_FALSE(is_quasi_invariant((x1 - x2).pow(3), 2));
    CHECK(is_quasi_invariant((x1 - x2).pow(5), 2));
    CHECK(is_quasi_invariant(x1 - x2, 0));
}

TEST_CASE("arrangement polynomial") {
    CHECK(arrangement_poly(CouplingParams(2, 1)) == var(2, 0) - var(2, 1));
    MultiPoly a3 = arrangement_poly(CouplingParams(3, 1));
    MultiPoly expect = root_form(3, 0, 1) * root_form(3, 0, 2) * root_form(3, 1, 2);
    CHECK(a3 == expect);
    CHECK(arrangement_poly(CouplingParams(3, 0)) == MultiPoly::constant(3, 1));
    CHECK(arrangement_poly(CouplingParams(2, 2)) == (var(2, 0) - var(2, 1)).pow(2));
    CHECK_THROWS_AS(arrangement_poly(CouplingParams(2, Rational(1, 2))),
                    std::invalid_argument);
}

TEST_CASE("qbasis dimensions at N=2 m=1") {
    CHECK(qbasis(2, 1, 0).size() == 1);
    CHECK(qbasis(2, 1, 1).size() == 1);
    CHECK(qbasis(2, 1, 2).size() == 2);
    CHECK(qbasis(2, 1, 3).size() == 3);
    auto d1 = qbasis(2, 1, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == var(2, 0) + var(2, 1));
}

TEST_CASE("qbasis at m=0 is all monomials") {
    auto b = qbasis(2, 0, 3);
    CHECK(b.size() == 4);
    for (const auto& p : b) CHECK(p.term_count() == 1);
}

TEST_CASE("qbasis members are quasi-invariant; dimensions decrease in m") {
    for (std::size_t N : {2u, 3u}) {
        for (long m : {0L, 1L, 2L}) {
            for (unsigned d = 0; d <= 6; ++d) {
                auto b = qbasis(N, m, d);
                for (const auto& q : b) {
                    CHECK(q.is_homogeneous());
                    CHECK(is_quasi_invariant(q, m));
                }
                if (m > 0) CHECK(qbasis(N, m - 1, d).size() >= b.size());
            }
        }
    }
}

TEST_CASE("symmetric polynomials are quasi-invariant for every m") {
    for (unsigned d = 1; d <= 5; ++d)
        for (const auto& mu : partitions_of(d, 3, d)) {
            MultiPoly f = monomial_symmetric(3, mu);
            if (f.is_zero()) continue;
            CHECK(is_quasi_invariant(f, 1));
            CHECK(is_quasi_invariant(f, 2));
            CHECK(is_quasi_invariant(f, 3));
        }
}

TEST_CASE("quasi-invariants are closed under L and the trig integrals") {
    for (std::size_t N : {2u, 3u}) {
        CouplingParams prm(N, 1);
        DiffOp L2 = build_trig_integral(power_sum(N, 2), prm);
        unsigned dmax = 8;
        for (unsigned d = 0; d <= dmax; ++d) {
            for (const auto& q : qbasis(N, 1, d)) {
                MultiPoly Lq = cm_apply(q, prm);
                if (d >= 2) {
                    CHECK((Lq.is_zero() || Lq.degree() == static_cast<int>(d) - 2));
                    CHECK(is_quasi_invariant(Lq, 1));
                } else {
                    CHECK(Lq.is_zero());
                }
                MultiPoly Tq = L2.apply_poly(q);
                CHECK(is_quasi_invariant(Tq, 1));
            }
        }
    }
}

TEST_CASE("dual basis duality") {
    CouplingParams prm(2, 1);
    Rational phi00(-2); // BA normalization for N=2, m=1
    for (unsigned d = 0; d <= 5; ++d) {
        auto lvl = build_graded_level(prm, d, phi00);
        REQUIRE(lvl.dual.size() == lvl.basis.size());
        for (std::size_t i = 0; i < lvl.basis.size(); ++i)
            for (std::size_t j = 0; j < lvl.basis.size(); ++j)
                CHECK(qm_pairing(lvl.basis[i], lvl.dual[j], prm) ==
                      (i == j ? phi00 : Rational(0)));
    }
}

TEST_CASE("dual basis: degree one inverts the 1x1 gram") {
    CouplingParams prm(2, 1);
    auto lvl = build_graded_level(prm, 1, Rational(-2));
    REQUIRE(lvl.basis.size() == 1);
    CHECK(lvl.basis[0] == var(2, 0) + var(2, 1));
    CHECK(lvl.gram[0][0] == Rational(2));
    CHECK(lvl.dual[0] == Rational(-1) * (var(2, 0) + var(2, 1)));
    // normalized pairing <q_1, q^1> = phi00^{-1} (q_1, q^1)_m = 1
    CHECK(qm_pairing(lvl.basis[0], lvl.dual[0], prm) * Rational(-1, 2) == Rational(1));
}

TEST_CASE("singular gram is reported, never regularized") {
    CouplingParams prm(2, 1);
    MultiPoly s = var(2, 0) + var(2, 1);
    std::vector<MultiPoly> dependent = {s, Rational(2) * s};
    auto g = gram_matrix(dependent, prm);
    CHECK_THROWS_AS(dual_basis(dependent, g, Rational(-2), 2), SingularGram);
    CHECK_THROWS_AS(dual_basis({MultiPoly::constant(2, 1)},
                               Matrix{{Rational(1)}}, Rational(0), 2),
                    Error);
}

TEST_CASE("graded level json round trip") {
    CouplingParams prm(2, 1);
    GradedBasis gb;
    gb.N = 2;
    gb.m = 1;
    gb.phi00 = Rational(-2);
    auto lvl = build_graded_level(prm, 2, gb.phi00);
    auto j = graded_level_to_json(gb, lvl);
    auto lvl2 = graded_level_from_json(j);
    CHECK(lvl2.degree == lvl.degree);
    CHECK(lvl2.basis == lvl.basis);
    CHECK(lvl2.dual == lvl.dual);
    CHECK(lvl2.gram == lvl.gram);
}
