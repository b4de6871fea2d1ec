#ifndef QHERM_BAFN_HPP
#define QHERM_BAFN_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "quasinv.hpp"

namespace qherm {

/// Polynomial part P(x,lambda) of the Baker-Akhiezer function
/// phi = P exp((x,lambda)), in 2N variables: x block first, lambda block at
/// offset N.
struct BAFunction {
    std::size_t N = 0;
    long m = 0;
    long total_mult = 0;   // |m| = m N(N-1)/2
    MultiPoly P;
    Rational phi00;

    BAFunction() : P(0) {}
};

inline MultiPoly lambda_square(std::size_t N) {
    MultiPoly s(2 * N);
    for (std::size_t i = 0; i < N; ++i) s.add_term(Mono::unit(2 * N, N + i, 2), Rational(1));
    return s;
}

inline std::vector<std::string> ba_var_names(std::size_t N) {
    std::vector<std::string> v = default_var_names(N, "x");
    auto l = default_var_names(N, "l");
    v.insert(v.end(), l.begin(), l.end());
    return v;
}

/// One sweep of the conjugated operator L - lambda^2 acting on cofactors of
/// exp((x,lambda)): every d_i is shifted by lambda_i, the -lambda^2 cancels
/// the shift inside the Laplacian.
inline RationalFn berest_step(const RationalFn& Q, std::size_t N, const Rational& c) {
    std::size_t big = 2 * N;
    RationalFn acc = RationalFn::zero(big);
    for (std::size_t i = 0; i < N; ++i) {
        RationalFn d = Q.derivative(i);
        acc += d.derivative(i);
        acc += Rational(2) * (d * MultiPoly::variable(big, N + i));
    }
    Rational two_c = Rational(2) * c;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            RationalFn t = Q.derivative(i) - Q.derivative(j);
            t += Q * (MultiPoly::variable(big, N + i) - MultiPoly::variable(big, N + j));
            acc -= two_c * t.divided_by_root(i, j);
        }
    return acc;
}

/// phi = (2^{|m|} |m|!)^{-1} (L - lambda^2)^{|m|} ( A_m(x)^2 exp((x,lambda)) ).
inline BAFunction berest_ba(const CouplingParams& prm) {
    long m = prm.multiplicity();
    std::size_t N = prm.N;
    long total = m * static_cast<long>(N * (N - 1) / 2);
    BAFunction ba;
    ba.N = N;
    ba.m = m;
    ba.total_mult = total;
    MultiPoly a2 = arrangement_poly(prm);
    a2 = (a2 * a2).embedded(2 * N, 0);
    RationalFn Q(a2);
    for (long k = 0; k < total; ++k) Q = berest_step(Q, N, prm.c);
    Q *= (Rational(2).pow(total) * Rational::factorial(static_cast<unsigned long>(total)))
             .inverse();
    if (!Q.is_polynomial())
        throw NonPolynomialResult("berest_ba: root factors did not cancel");
    ba.P = Q.to_poly();
    ba.phi00 = ba.P.constant_term();
    return ba;
}

inline MultiPoly ba_swap_blocks(const MultiPoly& P, std::size_t N) {
    std::vector<std::size_t> target(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        target[i] = N + i;
        target[N + i] = i;
    }
    return P.remapped(target, 2 * N);
}

/// Degree of a term within a variable block.
inline MultiPoly block_degree_part(const MultiPoly& P, std::size_t lo, std::size_t hi, unsigned d) {
    MultiPoly r(P.nvars());
    for (const auto& [mn, c] : P.terms()) {
        unsigned bd = 0;
        for (std::size_t i = lo; i < hi; ++i) bd += mn.exp(i);
        if (bd == d) r.add_term(mn, c);
    }
    return r;
}

inline unsigned block_degree(const MultiPoly& P, std::size_t lo, std::size_t hi) {
    unsigned d = 0;
    for (const auto& [mn, c] : P.terms()) {
        unsigned bd = 0;
        for (std::size_t i = lo; i < hi; ++i) bd += mn.exp(i);
        d = std::max(d, bd);
    }
    return d;
}

struct AxiomReport {
    bool leading_ok = false;
    bool vanishing_ok = false;
    bool schrodinger_ok = false;
    bool symmetry_ok = false;
    bool homogeneity_ok = false;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Checks the defining properties of the BA function:
///  (I)  leading x-part of P equals A_m(x) A_m(lambda),
///  (II) odd normal derivatives of P e^{(x,lambda)} vanish on x_i = x_j,
///  the Schroedinger equation L phi = lambda^2 phi,
///  P(x,lambda) = P(lambda,x), and x/lambda bidegree pairing.
inline AxiomReport check_axioms(const BAFunction& ba) {
    AxiomReport rep;
    std::size_t N = ba.N;
    CouplingParams prm(N, ba.m);
    std::size_t big = 2 * N;

    MultiPoly am_x = arrangement_poly(prm).embedded(big, 0);
    MultiPoly am_l = arrangement_poly(prm).embedded(big, N);
    unsigned top = block_degree(ba.P, 0, N);
    MultiPoly lead = block_degree_part(ba.P, 0, N, top);
    rep.leading_ok = (top == static_cast<unsigned>(ba.total_mult)) && (lead == am_x * am_l);
    if (!rep.leading_ok) rep.failures.push_back("leading term != A_m(x) A_m(lambda)");

    rep.vanishing_ok = true;
    for (std::size_t i = 0; i < N && rep.vanishing_ok; ++i)
        for (std::size_t j = i + 1; j < N && rep.vanishing_ok; ++j) {
            std::vector<std::size_t> ident(big);
            for (std::size_t v = 0; v < big; ++v) ident[v] = v;
            ident[j] = i; // substitute x_j = x_i
            MultiPoly lam = MultiPoly::variable(big, N + i) - MultiPoly::variable(big, N + j);
            MultiPoly R = ba.P;
            for (long s = 1; s <= ba.m; ++s) {
                // apply (d_i - d_j + (l_i - l_j)) twice raises the odd order
                for (int rep2 = 0; rep2 < (s == 1 ? 1 : 2); ++rep2)
                    R = R.derivative(i) - R.derivative(j) + lam * R;
                if (!R.remapped(ident, big).is_zero()) {
                    rep.vanishing_ok = false;
                    rep.failures.push_back("vanishing condition fails at order " +
                                           std::to_string(2 * s - 1) + " on pair (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                           ")");
                }
            }
        }

    MultiPoly l2 = lambda_square(N);
    RationalFn lhs = cm_operator(prm).conj_exp_apply(ba.P, 0, N);
    rep.schrodinger_ok = lhs.is_polynomial() && lhs.to_poly() == l2 * ba.P;
    if (!rep.schrodinger_ok) rep.failures.push_back("Schroedinger equation L phi = lambda^2 phi fails");

    rep.symmetry_ok = ba_swap_blocks(ba.P, N) == ba.P;
    if (!rep.symmetry_ok) rep.failures.push_back("P(x,lambda) != P(lambda,x)");

    rep.homogeneity_ok = true;
    for (const auto& [mn, c] : ba.P.terms()) {
        unsigned dx = 0, dl = 0;
        for (std::size_t v = 0; v < N; ++v) dx += mn.exp(v);
        for (std::size_t v = N; v < big; ++v) dl += mn.exp(v);
        if (dx != dl) {
            rep.homogeneity_ok = false;
            rep.failures.push_back("bidegree pairing violated");
            break;
        }
    }
    return rep;
}

/// L_q phi = q(lambda) phi for symmetric q, with L_q the rational integral.
inline bool check_Lq_eigen(const BAFunction& ba, const MultiPoly& p) {
    CouplingParams prm(ba.N, ba.m);
    DiffOp op = build_rat_integral(p, prm);
    RationalFn lhs = op.conj_exp_apply(ba.P, 0, ba.N);
    if (!lhs.is_polynomial()) return false;
    return lhs.to_poly() == p.embedded(2 * ba.N, ba.N) * ba.P;
}

/// The trigonometric integrals act the same in x and in lambda on phi.
inline bool check_trig_symmetry(const BAFunction& ba, const MultiPoly& p) {
    CouplingParams prm(ba.N, ba.m);
    DiffOp op = build_trig_integral(p, prm);
    RationalFn in_x = op.conj_exp_apply(ba.P, 0, ba.N);
    if (!in_x.is_polynomial()) return false;
    MultiPoly swapped = ba_swap_blocks(ba.P, ba.N);
    RationalFn in_l = op.conj_exp_apply(swapped, 0, ba.N);
    if (!in_l.is_polynomial()) return false;
    return in_x.to_poly() == ba_swap_blocks(in_l.to_poly(), ba.N);
}

struct ExpansionReport {
    unsigned max_degree = 0;
    std::vector<unsigned> mismatched_degrees;
    bool pass() const { return mismatched_degrees.empty(); }
};

/// The bidegree-(d,d) slice of P * taylor(exp((x,lambda))) must match
/// sum_i q_i(x) q^i(lambda) over the degree-d dual pair, for d <= D.
inline ExpansionReport expansion_vs_dual(const BAFunction& ba, const GradedBasis& gb, unsigned D) {
    ExpansionReport rep;
    rep.max_degree = D;
    std::size_t N = ba.N, big = 2 * N;
    MultiPoly pair(big);
    for (std::size_t i = 0; i < N; ++i) {
        Mono mn(big);
        mn.set_exp(i, 1);
        mn.set_exp(N + i, 1);
        pair.add_term(mn, Rational(1));
    }
    MultiPoly taylor = MultiPoly::constant(big, 1);
    MultiPoly pk = MultiPoly::constant(big, 1);
    for (unsigned k = 1; k <= D; ++k) {
        pk = pk * pair;
        taylor += Rational::factorial(k).inverse() * pk;
    }
    MultiPoly M = ba.P * taylor;
    for (unsigned d = 0; d <= D; ++d) {
        MultiPoly got(big);
        for (const auto& [mn, c] : M.terms()) {
            unsigned dx = 0, dl = 0;
            for (std::size_t v = 0; v < N; ++v) dx += mn.exp(v);
            for (std::size_t v = N; v < big; ++v) dl += mn.exp(v);
            if (dx == d && dl == d) got.add_term(mn, c);
        }
        const GradedLevel& lvl = gb.level(d);
        MultiPoly want(big);
        for (std::size_t i = 0; i < lvl.basis.size(); ++i)
            want += lvl.basis[i].embedded(big, 0) * lvl.dual[i].embedded(big, N);
        if (got != want) rep.mismatched_degrees.push_back(d);
    }
    return rep;
}

/// A-Hermite polynomial from the generating function: pair
/// F = phi e^{-lambda^2/2} against q in the lambda variables using the
/// Dunkl form, normalized by phi(0,0).
inline MultiPoly hermite_from_genfun(const BAFunction& ba, const MultiPoly& q) {
    if (!q.is_homogeneous())
        throw std::invalid_argument("hermite_from_genfun: q must be homogeneous");
    if (!is_quasi_invariant(q, ba.m))
        throw NotQuasiInvariant("hermite_from_genfun: q is not quasi-invariant");
    std::size_t N = ba.N, big = 2 * N;
    unsigned d = q.is_zero() ? 0 : static_cast<unsigned>(q.degree());
    // lambda-Taylor of exp((x,lambda)) exp(-lambda^2/2) through degree d
    MultiPoly pair(big);
    for (std::size_t i = 0; i < N; ++i) {
        Mono mn(big);
        mn.set_exp(i, 1);
        mn.set_exp(N + i, 1);
        pair.add_term(mn, Rational(1));
    }
    MultiPoly expf = MultiPoly::constant(big, 1);
    MultiPoly pk = MultiPoly::constant(big, 1);
    for (unsigned k = 1; k <= d; ++k) {
        pk = pk * pair;
        expf += Rational::factorial(k).inverse() * pk;
    }
    MultiPoly l2 = lambda_square(N);
    MultiPoly gk = MultiPoly::constant(big, 1);
    MultiPoly gauss = MultiPoly::constant(big, 1);
    for (unsigned k = 1; 2 * k <= d; ++k) {
        gk = gk * l2;
        gauss += (Rational(-1, 2).pow(k) / Rational::factorial(k)) * gk;
    }
    MultiPoly F = ba.P * expf * gauss;
    // truncate at lambda-degree d and hit with the canonical integral L_q
    // acting in the lambda block, via the binomial form of ad_L^d; only the
    // top lambda-slice survives and it is lambda-free
    MultiPoly Fd(big);
    for (const auto& [mn, c] : F.terms()) {
        unsigned dl = 0;
        for (std::size_t v = N; v < big; ++v) dl += mn.exp(v);
        if (dl <= d) Fd.add_term(mn, c);
    }
    Rational c_m(ba.m);
    MultiPoly qe = q.embedded(big, N);
    std::vector<MultiPoly> LF = {Fd};
    for (unsigned j = 0; j < d; ++j) LF.push_back(cm_apply_block(LF.back(), N, N, c_m));
    MultiPoly img(big);
    for (unsigned k = 0; k <= d; ++k) {
        MultiPoly t = qe * LF[d - k];
        for (unsigned j = 0; j < k; ++j) t = cm_apply_block(t, N, N, c_m);
        Rational sgn = (d - k) % 2 == 0 ? Rational(1) : Rational(-1);
        img += sgn * Rational::binomial(d, k) * t;
    }
    img *= (Rational(2).pow(d) * Rational::factorial(d)).inverse();
    MultiPoly res(N);
    for (const auto& [mn, c] : img.terms()) {
        unsigned dl = 0;
        for (std::size_t v = N; v < big; ++v) dl += mn.exp(v);
        if (dl > 0) continue; // positive lambda-degree evaluates to zero
        Mono t(N);
        for (std::size_t i = 0; i < N; ++i) t.set_exp(i, mn.exp(i));
        res.add_term(t, c);
    }
    return res * ba.phi00.inverse();
}

inline nlohmann::json ba_to_json(const BAFunction& ba) {
    nlohmann::json j;
    j["n"] = ba.N;
    j["m"] = ba.m;
    j["total_mult"] = ba.total_mult;
    j["phi00"] = ba.phi00.str();
    j["P"] = poly_to_json(ba.P, ba_var_names(ba.N));
    return j;
}

} // namespace qherm

#endif
