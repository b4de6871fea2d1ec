#ifndef QHERM_DEFORMED_HPP
#define QHERM_DEFORMED_HPP

#include <string>
#include <vector>

#include "cherednik.hpp"
#include "quasinv.hpp"

namespace qherm {

/// Two-species parameters; variables are z_1..z_{N1}, w_1..w_{N2} in that
/// order. Restriction-based operations need k to be a positive integer.
struct DeformedParams {
    std::size_t N1 = 1, N2 = 1;
    Rational k;

    DeformedParams(std::size_t n1, std::size_t n2, Rational kk)
        : N1(n1), N2(n2), k(std::move(kk)) {
        if (N1 < 1 || N2 < 1) throw std::invalid_argument("DeformedParams: N1, N2 >= 1");
        if (k.is_zero()) throw std::invalid_argument("DeformedParams: k must be nonzero");
    }

    std::size_t nvars() const { return N1 + N2; }

    long integer_k() const {
        if (!k.is_integer() || k.sign() <= 0)
            throw std::invalid_argument("integer k >= 1 required for restriction operations");
        return k.as_long();
    }

    /// Total particle number N = k N1 + N2 of the undeformed system.
    std::size_t full_N() const {
        return static_cast<std::size_t>(integer_k()) * N1 + N2;
    }

    std::vector<std::string> var_names() const {
        auto z = default_var_names(N1, "z");
        auto w = default_var_names(N2, "w");
        z.insert(z.end(), w.begin(), w.end());
        return z;
    }
};

/// Deformed Newton sum p_r = k sum z_i^r + sum w_j^r.
inline MultiPoly deformed_newton(unsigned r, const DeformedParams& dp) {
    std::size_t n = dp.nvars();
    MultiPoly p(n);
    if (r == 0)
        return MultiPoly::constant(n, dp.k * Rational(static_cast<long>(dp.N1)) +
                                          Rational(static_cast<long>(dp.N2)));
    for (std::size_t i = 0; i < dp.N1; ++i) p.add_term(Mono::unit(n, i, r), dp.k);
    for (std::size_t j = 0; j < dp.N2; ++j) p.add_term(Mono::unit(n, dp.N1 + j, r), Rational(1));
    return p;
}

enum class DeformedOp { RationalL, TrigL, Euler };

/// Exact action of the deformed operators on the safe class; NotDivisible
/// signals a polynomial outside it.
inline MultiPoly apply_deformed(DeformedOp which, const MultiPoly& f, const DeformedParams& dp) {
    std::size_t n = dp.nvars();
    if (f.nvars() != n) throw std::invalid_argument("apply_deformed: nvars mismatch");
    Rational kinv = dp.k.inverse();
    MultiPoly r(n);
    auto zvar = [&](std::size_t i) { return i; };
    auto wvar = [&](std::size_t j) { return dp.N1 + j; };
    switch (which) {
    case DeformedOp::Euler: {
        for (std::size_t v = 0; v < n; ++v)
            r += MultiPoly::variable(n, v) * f.derivative(v);
        return r;
    }
    case DeformedOp::RationalL: {
        for (std::size_t i = 0; i < dp.N1; ++i)
            r += kinv * f.derivative(zvar(i)).derivative(zvar(i));
        for (std::size_t j = 0; j < dp.N2; ++j)
            r += f.derivative(wvar(j)).derivative(wvar(j));
        for (std::size_t i = 0; i < dp.N1; ++i)
            for (std::size_t i2 = i + 1; i2 < dp.N1; ++i2) {
                MultiPoly num = f.derivative(zvar(i)) - f.derivative(zvar(i2));
                r -= Rational(2) * num.divided_by(root_form(n, zvar(i), zvar(i2)));
            }
        for (std::size_t j = 0; j < dp.N2; ++j)
            for (std::size_t j2 = j + 1; j2 < dp.N2; ++j2) {
                MultiPoly num = f.derivative(wvar(j)) - f.derivative(wvar(j2));
                r -= Rational(2) * kinv * num.divided_by(root_form(n, wvar(j), wvar(j2)));
            }
        for (std::size_t i = 0; i < dp.N1; ++i)
            for (std::size_t j = 0; j < dp.N2; ++j) {
                MultiPoly num = kinv * f.derivative(zvar(i)) - f.derivative(wvar(j));
                r -= Rational(2) * num.divided_by(root_form(n, zvar(i), wvar(j)));
            }
        return r;
    }
    case DeformedOp::TrigL: {
        auto xdx = [&](std::size_t v) { return MultiPoly::variable(n, v) * f.derivative(v); };
        for (std::size_t i = 0; i < dp.N1; ++i) {
            MultiPoly g = xdx(zvar(i));
            r += kinv * MultiPoly::variable(n, zvar(i)) * g.derivative(zvar(i));
        }
        for (std::size_t j = 0; j < dp.N2; ++j) {
            MultiPoly g = xdx(wvar(j));
            r += MultiPoly::variable(n, wvar(j)) * g.derivative(wvar(j));
        }
        auto cross = [&](std::size_t va, std::size_t vb, const Rational& couple) {
            MultiPoly sum = MultiPoly::variable(n, va) + MultiPoly::variable(n, vb);
            MultiPoly num = sum * (couple * MultiPoly::variable(n, va) * f.derivative(va) -
                                   MultiPoly::variable(n, vb) * f.derivative(vb));
            r -= num.divided_by(root_form(n, va, vb));
        };
        for (std::size_t i = 0; i < dp.N1; ++i)
            for (std::size_t i2 = i + 1; i2 < dp.N1; ++i2) {
                // coupling 1 between z's, overall coefficient 1
                MultiPoly sum = MultiPoly::variable(n, zvar(i)) + MultiPoly::variable(n, zvar(i2));
                MultiPoly num =
                    sum * (MultiPoly::variable(n, zvar(i)) * f.derivative(zvar(i)) -
                           MultiPoly::variable(n, zvar(i2)) * f.derivative(zvar(i2)));
                r -= num.divided_by(root_form(n, zvar(i), zvar(i2)));
            }
        for (std::size_t j = 0; j < dp.N2; ++j)
            for (std::size_t j2 = j + 1; j2 < dp.N2; ++j2) {
                MultiPoly sum = MultiPoly::variable(n, wvar(j)) + MultiPoly::variable(n, wvar(j2));
                MultiPoly num =
                    sum * (MultiPoly::variable(n, wvar(j)) * f.derivative(wvar(j)) -
                           MultiPoly::variable(n, wvar(j2)) * f.derivative(wvar(j2)));
                r -= kinv * num.divided_by(root_form(n, wvar(j), wvar(j2)));
            }
        for (std::size_t i = 0; i < dp.N1; ++i)
            for (std::size_t j = 0; j < dp.N2; ++j) cross(zvar(i), wvar(j), kinv);
        return r;
    }
    }
    throw std::logic_error("apply_deformed: unreachable");
}

/// Substitution onto the plane x_1=..=x_k=z_1, ..., x_{N1 k}=z_{N1},
/// x_{N1 k + j} = w_j.
inline MultiPoly restrict_to_pi(const MultiPoly& p, const DeformedParams& dp) {
    long k = dp.integer_k();
    std::size_t N = dp.full_N();
    if (p.nvars() != N) throw std::invalid_argument("restrict_to_pi: expected full-N polynomial");
    std::vector<std::size_t> target(N);
    for (std::size_t i = 0; i < dp.N1; ++i)
        for (long s = 0; s < k; ++s) target[i * static_cast<std::size_t>(k) + s] = i;
    for (std::size_t j = 0; j < dp.N2; ++j)
        target[dp.N1 * static_cast<std::size_t>(k) + j] = dp.N1 + j;
    return p.remapped(target, dp.nvars());
}

/// S_N-invariant lift of f: expand f in products of deformed Newton sums and
/// replace each p_r by the full power sum. Well-defined modulo the vanishing
/// ideal of the plane, which restriction kills again.
inline MultiPoly invariant_extension(const MultiPoly& f, const DeformedParams& dp) {
    std::size_t n = dp.nvars();
    if (f.nvars() != n) throw std::invalid_argument("invariant_extension: nvars mismatch");
    std::size_t N = dp.full_N();
    MultiPoly out(N);
    for (const auto& [d, fd] : f.homogeneous_parts()) {
        if (d == 0) {
            out += MultiPoly::constant(N, fd.constant_term());
            continue;
        }
        auto mus = partitions_of(static_cast<unsigned>(d), static_cast<std::size_t>(d),
                                 static_cast<unsigned>(d));
        std::map<Mono, std::size_t> rowidx;
        std::vector<MultiPoly> prods;
        for (const auto& mu : mus) {
            MultiPoly prod = MultiPoly::constant(n, 1);
            for (unsigned part : mu.parts) prod = prod * deformed_newton(part, dp);
            for (const auto& [mn, cc] : prod.terms()) rowidx.try_emplace(mn, rowidx.size());
            prods.push_back(std::move(prod));
        }
        for (const auto& [mn, cc] : fd.terms()) rowidx.try_emplace(mn, rowidx.size());
        Matrix A(rowidx.size(), std::vector<Rational>(mus.size(), Rational(0)));
        std::vector<Rational> b(rowidx.size(), Rational(0));
        for (std::size_t col = 0; col < prods.size(); ++col)
            for (const auto& [mn, cc] : prods[col].terms()) A[rowidx[mn]][col] = cc;
        for (const auto& [mn, cc] : fd.terms()) b[rowidx[mn]] = cc;
        auto sol = solve(std::move(A), std::move(b));
        if (!sol)
            throw ExtensionFailed("invariant_extension: not in the deformed Newton algebra");
        for (std::size_t t = 0; t < mus.size(); ++t) {
            if ((*sol)[t].is_zero()) continue;
            MultiPoly prod = MultiPoly::constant(N, 1);
            for (unsigned part : mus[t].parts) prod = prod * power_sum(N, part);
            out += (*sol)[t] * prod;
        }
    }
    return out;
}

enum class ResGenerator { SumD2, SumXD, SumXD2 };

/// Restriction route: apply the collapsed Dunkl generator at coupling 1/k to
/// a symmetric polynomial in all N variables, then substitute onto the plane.
inline MultiPoly res_pi_apply(const MultiPoly& p, const DeformedParams& dp, ResGenerator gen) {
    std::size_t N = dp.full_N();
    if (p.nvars() != N) throw std::invalid_argument("res_pi_apply: expected full-N polynomial");
    if (!is_symmetric(p)) throw NotSymmetric("res_pi_apply: polynomial must be symmetric");
    CouplingParams prm(N, dp.k.inverse());
    DiffOp op(N);
    switch (gen) {
    case ResGenerator::SumD2: op = collapsed_power_sum(GenKind::DunklPower, 2, prm); break;
    case ResGenerator::SumXD: op = collapsed_power_sum(GenKind::PolyPower, 1, prm); break;
    case ResGenerator::SumXD2: op = collapsed_power_sum(GenKind::PolyPower, 2, prm); break;
    }
    return restrict_to_pi(op.apply_poly(p), dp);
}

/// Membership in the generalized quasi-invariants Lambda_{N1,N2}(k):
/// S_{N2}-symmetry in w, k-quasi-invariance in z, and the mixed condition
/// d_z q = k d_w q on z_i = w_j.
inline bool lambda_k_membership(const MultiPoly& q, const DeformedParams& dp) {
    long k = dp.integer_k();
    std::size_t n = dp.nvars();
    if (q.nvars() != n) throw std::invalid_argument("lambda_k_membership: nvars mismatch");
    for (std::size_t j = 0; j + 1 < dp.N2; ++j) {
        Permutation s = Permutation::transposition(n, dp.N1 + j, dp.N1 + j + 1);
        if (q.permuted(s) != q) return false;
    }
    for (std::size_t i = 0; i < dp.N1; ++i)
        for (std::size_t i2 = i + 1; i2 < dp.N1; ++i2) {
            MultiPoly diff = q - q.permuted(Permutation::transposition(n, i, i2));
            if (diff.is_zero()) continue;
            if (!diff.divisible_by(root_form(n, i, i2).pow(static_cast<unsigned>(2 * k + 1))))
                return false;
        }
    for (std::size_t i = 0; i < dp.N1; ++i)
        for (std::size_t j = 0; j < dp.N2; ++j) {
            MultiPoly diff = q.derivative(i) - Rational(k) * q.derivative(dp.N1 + j);
            if (diff.is_zero()) continue;
            if (!diff.divisible_by(root_form(n, i, dp.N1 + j))) return false;
        }
    return true;
}

/// chi_{N1,N2}(f) = e^{-L_{N1,N2}/2} f, exact finite sum on the safe class.
inline MultiPoly chi_deformed(const MultiPoly& f, const DeformedParams& dp) {
    MultiPoly acc = f, term = f;
    Rational coef(1);
    int k = 0;
    while (!term.is_zero()) {
        term = apply_deformed(DeformedOp::RationalL, term, dp);
        ++k;
        coef *= Rational(-1, 2) / Rational(k);
        acc += coef * term;
    }
    return acc;
}

struct DeformedReport {
    std::vector<std::string> failures;
    unsigned eigen_checked = 0;
    unsigned restriction_checked = 0;
    unsigned membership_checked = 0;
    bool pass() const { return failures.empty(); }
};

/// Deformed correspondence sweep:
///  (a) (E - L) chi(f) = (deg f) chi(f) for deformed Newton monomials to
///      degree D,
///  (b) for integer k, the Dunkl restriction route reproduces the deformed
///      operators on lifted polynomials,
///  (c) L and chi preserve Lambda(k) membership.
inline DeformedReport verify_deformed_correspondence(const DeformedParams& dp, unsigned D) {
    DeformedReport rep;
    std::vector<std::pair<Partition, MultiPoly>> family;
    for (unsigned d = 1; d <= D; ++d)
        for (const auto& mu : partitions_of(d, d, d)) {
            MultiPoly f = MultiPoly::constant(dp.nvars(), 1);
            for (unsigned part : mu.parts) f = f * deformed_newton(part, dp);
            family.emplace_back(mu, std::move(f));
        }
    for (const auto& [mu, f] : family) {
        MultiPoly chi = chi_deformed(f, dp);
        MultiPoly lhs = apply_deformed(DeformedOp::Euler, chi, dp) -
                        apply_deformed(DeformedOp::RationalL, chi, dp);
        if (lhs != Rational(static_cast<long>(mu.weight())) * chi)
            rep.failures.push_back("eigen identity fails on p_" + mu.str());
        ++rep.eigen_checked;
    }
    bool integer_k = dp.k.is_integer() && dp.k.sign() > 0;
    if (integer_k) {
        for (const auto& [mu, f] : family) {
            if (mu.weight() > 4 && mu.length() > 1) continue; // keep the sweep quick
            MultiPoly lift = invariant_extension(f, dp);
            if (restrict_to_pi(lift, dp) != f) {
                rep.failures.push_back("extension does not restrict back on p_" + mu.str());
                continue;
            }
            struct Pair {
                ResGenerator gen;
                DeformedOp op;
                const char* name;
            } routes[] = {{ResGenerator::SumD2, DeformedOp::RationalL, "rational"},
                          {ResGenerator::SumXD, DeformedOp::Euler, "euler"},
                          {ResGenerator::SumXD2, DeformedOp::TrigL, "trigonometric"}};
            for (const auto& route : routes) {
                if (res_pi_apply(lift, dp, route.gen) != apply_deformed(route.op, f, dp)) {
                    rep.failures.push_back(std::string("restriction route ") + route.name +
                                           " fails on p_" + mu.str());
                }
                ++rep.restriction_checked;
            }
        }
        for (const auto& [mu, f] : family) {
            if (!lambda_k_membership(f, dp)) {
                rep.failures.push_back("newton monomial not in Lambda(k): p_" + mu.str());
                continue;
            }
            MultiPoly Lf = apply_deformed(DeformedOp::RationalL, f, dp);
            if (!Lf.is_zero() && !lambda_k_membership(Lf, dp))
                rep.failures.push_back("L image leaves Lambda(k): p_" + mu.str());
            if (!lambda_k_membership(chi_deformed(f, dp), dp))
                rep.failures.push_back("chi image leaves Lambda(k): p_" + mu.str());
            ++rep.membership_checked;
        }
    }
    return rep;
}

} // namespace qherm

#endif
