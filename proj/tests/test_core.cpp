#include <catch_amalgamated.hpp>

#include <qherm/multipoly.hpp>
#include <qherm/poly_json.hpp>

#include <random>

using namespace qherm;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    MultiPoly p(nvars);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Mono m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m.set_exp(i, expo(rng) / nvars);
        p.add_term(m, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-14/7").str() == "-2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(3, 2).pow(2) == Rational(9, 4));
    CHECK(Rational(-2).pow(-2) == Rational(1, 4));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::binomial(6, 2) == Rational(15));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1).inverse() / Rational(0));
}

TEST_CASE("monomial order is graded lex") {
    Mono a(2, {0, 2});
    Mono b(2, {1, 0});
    CHECK(b < a);              // degree first
    Mono c(2, {0, 1});
    Mono d(2, {1, 0});
    CHECK(c < d);              // same degree, lex with var 0 dominant
    CHECK(a.times(b) == Mono(2, {1, 2}));
    CHECK(Mono(2, {1, 2}).divided_by(b) == a);
    CHECK(b.divides(Mono(2, {1, 2})));
    CHECK_FALSE(a.divides(b));
}

TEST_CASE("ring operations on spot examples") {
    std::size_t n = 2;
    MultiPoly x1 = var(n, 0), x2 = var(n, 1);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    MultiPoly p = x1 * x1 * x2;
    CHECK(p + MultiPoly::zero(n) == p);
    CHECK(Rational(3) * (x1 * x1) - x1 * x1 == Rational(2) * x1 * x1);
    CHECK_THROWS_AS(p + MultiPoly::zero(3), std::invalid_argument);
}

TEST_CASE("exact division") {
    std::size_t n = 2;
    MultiPoly x1 = var(n, 0), x2 = var(n, 1);
    MultiPoly u = x1 - x2;
    CHECK((x1 * x1 - x2 * x2).divided_by(u) == x1 + x2);
    CHECK(u.pow(3).divided_by(u) == u.pow(2));
    CHECK_FALSE((x1 * x1 + x2 * x2).try_divided_by(u).has_value());
    CHECK_THROWS_AS((x1 * x1 + x2 * x2).divided_by(u), NotDivisible);
}

TEST_CASE("partial derivative") {
    std::size_t n = 2;
    MultiPoly x1 = var(n, 0), x2 = var(n, 1);
    CHECK((x1 * x1 * x2).derivative(0) == Rational(2) * x1 * x2);
    CHECK(x1.derivative(1).is_zero());
    MultiPoly u2 = (x1 - x2).pow(2);
    CHECK(u2.derivative(0) - u2.derivative(1) == Rational(4) * (x1 - x2));
    CHECK_THROWS_AS(x1.derivative(5), std::out_of_range);
}

TEST_CASE("permutation action") {
    std::size_t n = 2;
    MultiPoly x1 = var(n, 0), x2 = var(n, 1);
    Permutation s = Permutation::transposition(n, 0, 1);
    CHECK((x1 * x1 * x2).permuted(s) == x2 * x2 * x1);
    CHECK((x1 * x1 * x2).permuted(Permutation::identity(n)) == x1 * x1 * x2);
    CHECK((x1 + x2).permuted(s) == x1 + x2);
}

TEST_CASE("permutation action is a left action on 3-cycles") {
    std::size_t n = 3;
    Permutation v = Permutation::from_images({1, 2, 0});
    Permutation w = Permutation::from_images({0, 2, 1});
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly p = random_poly(rng, n, 5, 6);
        CHECK(p.permuted(v * w) == p.permuted(w).permuted(v));
    }
}

TEST_CASE("homogeneous parts recompose and are sorted") {
    std::size_t n = 2;
    MultiPoly x1 = var(n, 0);
    MultiPoly p = x1 * x1 + x1;
    auto parts = p.homogeneous_parts();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 1);
    CHECK(parts[0].second == x1);
    CHECK(parts[1].first == 2);
    CHECK(parts[1].second == x1 * x1);
    CHECK(MultiPoly::zero(n).homogeneous_parts().empty());
    MultiPoly h = x1 * x1;
    auto hp = h.homogeneous_parts();
    REQUIRE(hp.size() == 1);
    CHECK(hp[0].first == h.degree());

    std::mt19937 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly q = random_poly(rng, 3, 6, 8);
        MultiPoly sum(3);
        int last = -1;
        for (const auto& [d, part] : q.homogeneous_parts()) {
            CHECK(d > last);
            CHECK(part.is_homogeneous());
            last = d;
            sum += part;
        }
        CHECK(sum == q);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        MultiPoly a = random_poly(rng, 3, 4, 5);
        MultiPoly b = random_poly(rng, 3, 4, 5);
        MultiPoly c = random_poly(rng, 3, 4, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact_div undoes multiplication") {
    std::mt19937 rng(43);
    for (int rep = 0; rep < 25; ++rep) {
        MultiPoly a = random_poly(rng, 2, 4, 4);
        MultiPoly b = random_poly(rng, 2, 4, 4);
        if (b.is_zero()) continue;
        CHECK((a * b).divided_by(b) == a);
    }
}

TEST_CASE("degree conventions") {
    MultiPoly z = MultiPoly::zero(2);
    CHECK(z.degree() == -1);
    CHECK(MultiPoly::constant(2, Rational(5)).degree() == 0);
    CHECK(z.is_homogeneous());
}

TEST_CASE("json round trip is canonical and bit-exact") {
    std::size_t n = 2;
    MultiPoly x1 = var(n, 0), x2 = var(n, 1);
    MultiPoly p = Rational(3, 2) * x1 * x1 + Rational(-7) * x2 + MultiPoly::constant(n, Rational(1, 3));
    auto j = poly_to_json(p);
    CHECK(j["vars"] == nlohmann::json({"x1", "x2"}));
    CHECK(poly_from_json(j) == p);
    CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());

    std::mt19937 rng(44);
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly q = random_poly(rng, 3, 6, 10);
        auto jq = poly_to_json(q);
        CHECK(poly_from_json(jq) == q);
        CHECK(poly_to_json(poly_from_json(jq)).dump() == jq.dump());
    }
}

TEST_CASE("parse and overflow limits") {
    CHECK_THROWS_AS(Rational::parse("not-a-number"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Mono(9), std::invalid_argument);
    Mono big(1, {200});
    CHECK_THROWS_AS(big.times(big), std::overflow_error);
    CHECK_THROWS_AS(MultiPoly::zero(9), std::invalid_argument);
}

TEST_CASE("remainder is linear and detects divisibility") {
    std::mt19937 rng(77);
    MultiPoly d = (MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1)).pow(3);
    for (int rep = 0; rep < 15; ++rep) {
        MultiPoly a = random_poly(rng, 2, 5, 5);
        MultiPoly b = random_poly(rng, 2, 5, 5);
        CHECK((a + b).remainder_mod(d) == a.remainder_mod(d) + b.remainder_mod(d));
        CHECK((a * d).remainder_mod(d).is_zero());
        CHECK(a.remainder_mod(d).is_zero() == a.divisible_by(d));
    }
}

TEST_CASE("remap and substitution") {
    std::size_t n = 3;
    MultiPoly x1 = var(n, 0), x2 = var(n, 1), x3 = var(n, 2);
    // identify x2 with x1, drop into a 2-variable ring
    MultiPoly p = x1 * x2 + x3;
    MultiPoly q = p.remapped({0, 0, 1}, 2);
    CHECK(q == var(2, 0) * var(2, 0) + var(2, 1));
    CHECK(p.substituted(1, x1) == x1 * x1 + x3);
    CHECK(p.with_vars_zeroed({2}) == x1 * x2);
    MultiPoly e = var(2, 0).embedded(3, 1);
    CHECK(e == x2);
}
