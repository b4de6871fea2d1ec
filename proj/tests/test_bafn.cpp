#include <catch_amalgamated.hpp>

#include <qherm/bafn.hpp>

using namespace qherm;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

GradedBasis graded(const BAFunction& ba, unsigned dmax) {
    GradedBasis gb;
    gb.N = ba.N;
    gb.m = ba.m;
    gb.phi00 = ba.phi00;
    CouplingParams prm(ba.N, ba.m);
    for (unsigned d = 0; d <= dmax; ++d) gb.levels[d] = build_graded_level(prm, d, ba.phi00);
    return gb;
}

} // namespace

TEST_CASE("berest golden output at N=2 m=1") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    MultiPoly expect =
        (var(4, 0) - var(4, 1)) * (var(4, 2) - var(4, 3)) - MultiPoly::constant(4, Rational(2));
    CHECK(ba.P == expect);
    CHECK(ba.phi00 == Rational(-2));
    CHECK(ba.total_mult == 1);
}

TEST_CASE("berest at m=0 is the bare exponential") {
    BAFunction ba = berest_ba(CouplingParams(2, 0));
    CHECK(ba.P == MultiPoly::constant(4, 1));
    CHECK(ba.phi00 == Rational(1));
    auto rep = check_axioms(ba);
    CHECK(rep.pass());
}

TEST_CASE("one-dimensional operator product on the exponential") {
    // (x d/dx - 1) e^{lx} = (lx - 1) e^{lx}, on truncations of e^{lx}
    unsigned K = 9;
    MultiPoly x = var(2, 0), l = var(2, 1);
    MultiPoly expK(2);
    for (unsigned k = 0; k <= K; ++k) {
        Mono mn(2);
        mn.set_exp(0, k);
        mn.set_exp(1, k);
        expK.add_term(mn, Rational::factorial(k).inverse());
    }
    MultiPoly lhs = x * expK.derivative(0) - expK;
    MultiPoly rhs = (l * x - MultiPoly::constant(2, 1)) * expK;
    // agreement through bidegree K
    for (unsigned k = 0; k <= K; ++k) {
        Mono mn(2);
        mn.set_exp(0, k);
        mn.set_exp(1, k);
        CHECK(lhs.coeff(mn) == rhs.coeff(mn));
    }
}

TEST_CASE("axioms hold for the desk instances") {
    for (auto [N, m] : {std::pair<std::size_t, long>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        BAFunction ba = berest_ba(CouplingParams(N, m));
        auto rep = check_axioms(ba);
        INFO("N=" << N << " m=" << m);
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.pass());
    }
}

TEST_CASE("corrupted constant term breaks the vanishing conditions") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    ba.P += MultiPoly::constant(4, 1); // -2 becomes -1
    ba.phi00 = ba.P.constant_term();
    auto rep = check_axioms(ba);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.vanishing_ok);
    CHECK(rep.leading_ok); // leading term untouched
}

TEST_CASE("quantum integrals act on phi with symbol eigenvalues") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    CHECK(check_Lq_eigen(ba, power_sum(2, 1)));
    CHECK(check_Lq_eigen(ba, power_sum(2, 2)));
    CHECK(check_Lq_eigen(ba, MultiPoly::constant(2, 1)));
    BAFunction ba31 = berest_ba(CouplingParams(3, 1));
    CHECK(check_Lq_eigen(ba31, power_sum(3, 1)));
    CHECK(check_Lq_eigen(ba31, power_sum(3, 2)));
}

TEST_CASE("trig integrals act symmetrically in x and lambda") {
    for (auto [N, m] : {std::pair<std::size_t, long>{2, 1}, {2, 2}}) {
        BAFunction ba = berest_ba(CouplingParams(N, m));
        CHECK(check_trig_symmetry(ba, power_sum(N, 1)));
        CHECK(check_trig_symmetry(ba, power_sum(N, 2)));
    }
    // m = 0: phi is the bare exponential
    BAFunction ba0 = berest_ba(CouplingParams(2, 0));
    CHECK(check_trig_symmetry(ba0, power_sum(2, 1)));
    CHECK(check_trig_symmetry(ba0, power_sum(2, 2)));
}

TEST_CASE("expansion against dual bases") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    auto gb = graded(ba, 6);
    auto rep = expansion_vs_dual(ba, gb, 6);
    CHECK(rep.pass());

    BAFunction ba0 = berest_ba(CouplingParams(2, 0));
    auto gb0 = graded(ba0, 4);
    CHECK(expansion_vs_dual(ba0, gb0, 4).pass());
}

TEST_CASE("hermite from the generating function") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    CHECK(hermite_from_genfun(ba, MultiPoly::constant(2, 1)) == MultiPoly::constant(2, 1));
    MultiPoly s2 = (var(2, 0) + var(2, 1)).pow(2);
    CHECK(hermite_from_genfun(ba, s2) == s2 - MultiPoly::constant(2, Rational(2)));
    CHECK_THROWS_AS(hermite_from_genfun(ba, var(2, 0) - var(2, 1)), NotQuasiInvariant);
    // classical limit: N=1, m=0, x^n gives the probabilists' Hermite
    BAFunction ba1 = berest_ba(CouplingParams(1, 0));
    MultiPoly x = var(1, 0);
    CHECK(hermite_from_genfun(ba1, x.pow(4)) ==
          x.pow(4) - Rational(6) * x.pow(2) + MultiPoly::constant(1, 3));
}

TEST_CASE("berest requires an integer multiplicity") {
    CHECK_THROWS_AS(berest_ba(CouplingParams(2, Rational(1, 2))), std::invalid_argument);
    CHECK_THROWS_AS(berest_ba(CouplingParams(2, Rational(-1))), std::invalid_argument);
}

TEST_CASE("ba export json") {
    BAFunction ba = berest_ba(CouplingParams(2, 1));
    auto j = ba_to_json(ba);
    CHECK(j["phi00"] == "-2");
    CHECK(j["total_mult"] == 1);
    CHECK(poly_from_json(j["P"]) == ba.P);
    CHECK(j["P"]["vars"] == nlohmann::json({"x1", "x2", "l1", "l2"}));
}
