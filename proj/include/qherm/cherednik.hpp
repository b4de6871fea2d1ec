#ifndef QHERM_CHEREDNIK_HPP
#define QHERM_CHEREDNIK_HPP

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "linalg.hpp"
#include "partitions.hpp"
#include "skew.hpp"

namespace qherm {

/// Type-A coupling data: N particles, coupling c. For quasi-invariant
/// constructions c must be a nonnegative integer (the multiplicity m).
struct CouplingParams {
    std::size_t N;
    Rational c;

    CouplingParams(std::size_t n, Rational coupling) : N(n), c(std::move(coupling)) {
        if (N < 1) throw std::invalid_argument("CouplingParams: N >= 1 required");
    }
    CouplingParams(std::size_t n, long m) : CouplingParams(n, Rational(m)) {}

    /// The multiplicity m; throws unless c is a nonnegative integer.
    long multiplicity() const {
        if (!c.is_integer() || c.sign() < 0)
            throw std::invalid_argument("coupling must be a nonnegative integer here");
        return c.as_long();
    }

    std::string key() const { return std::to_string(N) + "|" + c.str(); }
};

inline bool is_symmetric(const MultiPoly& p) {
    for (std::size_t k = 0; k + 1 < p.nvars(); ++k)
        if (p.permuted(Permutation::transposition(p.nvars(), k, k + 1)) != p) return false;
    return true;
}

/// Coefficient num/(x_i - x_j), either index order.
inline RationalFn over_root(MultiPoly num, std::size_t i, std::size_t j) {
    return RationalFn(std::move(num)).divided_by_root(i, j);
}

/// Dunkl operator D_i = d_i + c sum_{j != i} (x_i - x_j)^{-1} (s_ij - 1).
inline SkewElement dunkl(std::size_t i, const CouplingParams& prm) {
    std::size_t N = prm.N;
    if (i >= N) throw std::out_of_range("dunkl: index out of range");
    SkewElement e(N);
    DiffOp id_part = DiffOp::partial(N, i);
    for (std::size_t j = 0; j < N; ++j) {
        if (j == i || prm.c.is_zero()) continue;
        RationalFn coef = over_root(MultiPoly::constant(N, prm.c), i, j);
        e.add_part(Permutation::transposition(N, i, j), DiffOp::from_term(Mono(N), coef));
        id_part.add_term(Mono(N), -coef);
    }
    e.add_part(Permutation::identity(N), id_part);
    return e;
}

/// Polychronakos operator pi_i = x_i D_i.
inline SkewElement polychronakos(std::size_t i, const CouplingParams& prm) {
    SkewElement xi = SkewElement::from_diffop(
        DiffOp::multiplication(MultiPoly::variable(prm.N, i)));
    return xi.compose(dunkl(i, prm));
}

/// Heckman operator
/// D_i = x_i d_i - c/2 sum_{j != i} ((x_i+x_j)/(x_i-x_j)) (1 - s_ij).
inline SkewElement heckman(std::size_t i, const CouplingParams& prm) {
    std::size_t N = prm.N;
    if (i >= N) throw std::out_of_range("heckman: index out of range");
    SkewElement e(N);
    DiffOp id_part = DiffOp::from_term(Mono::unit(N, i), RationalFn(MultiPoly::variable(N, i)));
    Rational half = prm.c / Rational(2);
    for (std::size_t j = 0; j < N; ++j) {
        if (j == i || half.is_zero()) continue;
        MultiPoly num = (MultiPoly::variable(N, i) + MultiPoly::variable(N, j)) * half;
        RationalFn coef = over_root(num, i, j);
        id_part.add_term(Mono(N), -coef);
        e.add_part(Permutation::transposition(N, i, j), DiffOp::from_term(Mono(N), coef));
    }
    e.add_part(Permutation::identity(N), id_part);
    return e;
}

/// Dunkl operators act inside a variable block of a possibly larger ring:
/// block variables are offset..offset+count-1, i is block-local.
inline MultiPoly dunkl_apply_block(const MultiPoly& f, std::size_t offset, std::size_t count,
                                   std::size_t i, const Rational& c) {
    std::size_t vi = offset + i;
    MultiPoly r = f.derivative(vi);
    if (!c.is_zero()) {
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            std::size_t vj = offset + j;
            MultiPoly diff = f.permuted(Permutation::transposition(f.nvars(), vi, vj)) - f;
            r += c * diff.divided_by(root_form(f.nvars(), vi, vj));
        }
    }
    return r;
}

/// Fast exact action of D_i on a polynomial.
inline MultiPoly dunkl_apply(const MultiPoly& f, std::size_t i, const CouplingParams& prm) {
    if (f.nvars() != prm.N) throw std::invalid_argument("dunkl_apply: nvars mismatch");
    return dunkl_apply_block(f, 0, prm.N, i, prm.c);
}

/// p(D_1,...,D_N) f for arbitrary p (Dunkl operators commute). Shares
/// partial chains between monomials of p.
inline MultiPoly dunkl_poly_apply(const MultiPoly& p, const MultiPoly& f,
                                  const CouplingParams& prm) {
    if (p.nvars() != f.nvars() || f.nvars() != prm.N)
        throw std::invalid_argument("dunkl_poly_apply: nvars mismatch");
    std::map<Mono, MultiPoly> memo;
    memo.emplace(Mono(prm.N), f);
    auto get = [&](auto&& self, const Mono& e) -> const MultiPoly& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        std::size_t i = 0;
        while (e.exp(i) == 0) ++i;
        Mono parent = e;
        parent.set_exp(i, e.exp(i) - 1);
        MultiPoly val = dunkl_apply(self(self, parent), i, prm);
        return memo.emplace(e, std::move(val)).first->second;
    };
    MultiPoly acc(prm.N);
    for (const auto& [e, c] : p.terms()) acc += c * get(get, e);
    return acc;
}

/// The bilinear form [p,q] = (p(D)q)(0). Symmetric; vanishes across
/// different homogeneous degrees; exchange-adjoint for x_j vs D_j.
inline Rational djo_form(const MultiPoly& p, const MultiPoly& q, const CouplingParams& prm) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("djo_form: nvars mismatch");
    // only matching homogeneous degrees contribute to the value at 0
    Rational acc(0);
    auto qparts = q.homogeneous_parts();
    for (const auto& [dq, qd] : qparts) {
        MultiPoly pd = p.homogeneous_part(dq);
        if (pd.is_zero()) continue;
        acc += dunkl_poly_apply(pd, qd, prm).constant_term();
    }
    return acc;
}

/// Gauged CM operator L = Delta - sum_{i<j} (2c/(x_i-x_j)) (d_i - d_j).
inline DiffOp cm_operator(const CouplingParams& prm) {
    std::size_t N = prm.N;
    DiffOp L = DiffOp::laplacian(N);
    Rational two_c = Rational(2) * prm.c;
    if (!two_c.is_zero()) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) {
                RationalFn coef = over_root(MultiPoly::constant(N, two_c), i, j);
                L.add_term(Mono::unit(N, i), -coef);
                L.add_term(Mono::unit(N, j), coef);
            }
    }
    return L;
}

/// Trigonometric CM Hamiltonian in exponential coordinates:
/// sum (x_i d_i)^2 - c sum_{i<j} ((x_i+x_j)/(x_i-x_j)) (x_i d_i - x_j d_j).
inline DiffOp trig_cm_operator(const CouplingParams& prm) {
    std::size_t N = prm.N;
    DiffOp H(N);
    for (std::size_t i = 0; i < N; ++i) {
        MultiPoly xi = MultiPoly::variable(N, i);
        H.add_term(Mono::unit(N, i, 2), RationalFn(xi * xi));
        H.add_term(Mono::unit(N, i), RationalFn(xi));
    }
    if (!prm.c.is_zero()) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) {
                MultiPoly xi = MultiPoly::variable(N, i), xj = MultiPoly::variable(N, j);
                MultiPoly num = (xi + xj) * prm.c;
                H.add_term(Mono::unit(N, i), -over_root(num * xi, i, j));
                H.add_term(Mono::unit(N, j), over_root(num * xj, i, j));
            }
    }
    return H;
}

/// Harmonic version L^H = L - E.
inline DiffOp harmonic_cm_operator(const CouplingParams& prm) {
    return cm_operator(prm) - DiffOp::euler(prm.N);
}

/// Exact action of L on the variable block offset..offset+count-1 of a
/// polynomial in a possibly larger ring; the singular divisions must
/// cancel, which holds exactly on quasi-invariants.
inline MultiPoly cm_apply_block(const MultiPoly& f, std::size_t offset, std::size_t count,
                                const Rational& c) {
    MultiPoly r(f.nvars());
    for (std::size_t i = 0; i < count; ++i)
        r += f.derivative(offset + i).derivative(offset + i);
    Rational two_c = Rational(2) * c;
    if (!two_c.is_zero()) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                MultiPoly num = f.derivative(offset + i) - f.derivative(offset + j);
                auto quot = num.try_divided_by(root_form(f.nvars(), offset + i, offset + j));
                if (!quot)
                    throw NotQuasiInvariant("cm_apply: singular term does not divide");
                r -= two_c * *quot;
            }
    }
    return r;
}

inline MultiPoly cm_apply(const MultiPoly& f, const CouplingParams& prm) {
    if (f.nvars() != prm.N) throw std::invalid_argument("cm_apply: nvars mismatch");
    return cm_apply_block(f, 0, prm.N, prm.c);
}

/// Expansion of a symmetric polynomial in products of Newton power sums
/// p_mu = prod p_{mu_t}. Parts are not capped at N and the column order
/// prefers single power sums, so p_k decomposes as itself; this matters
/// because the pi-substitutes of the power sums satisfy no scalar Newton
/// relations and the trigonometric integrals are pinned to sum_i pi_i^k.
inline std::vector<std::pair<Partition, Rational>> powersum_decompose(const MultiPoly& p) {
    if (!is_symmetric(p)) throw NotSymmetric("powersum_decompose: polynomial is not symmetric");
    std::size_t N = p.nvars();
    std::vector<std::pair<Partition, Rational>> out;
    for (const auto& [d, pd] : p.homogeneous_parts()) {
        if (d == 0) {
            out.emplace_back(Partition{}, pd.constant_term());
            continue;
        }
        auto mus = partitions_of(static_cast<unsigned>(d), static_cast<std::size_t>(d),
                                 static_cast<unsigned>(d));
        std::vector<MultiPoly> prods;
        prods.reserve(mus.size());
        std::map<Mono, std::size_t> rowidx;
        for (const auto& mu : mus) {
            MultiPoly prod = MultiPoly::constant(N, 1);
            for (unsigned part : mu.parts) prod = prod * power_sum(N, part);
            for (const auto& [mn, cc] : prod.terms()) rowidx.try_emplace(mn, rowidx.size());
            prods.push_back(std::move(prod));
        }
        for (const auto& [mn, cc] : pd.terms()) rowidx.try_emplace(mn, rowidx.size());
        Matrix A(rowidx.size(), std::vector<Rational>(mus.size(), Rational(0)));
        std::vector<Rational> b(rowidx.size(), Rational(0));
        for (std::size_t col = 0; col < prods.size(); ++col)
            for (const auto& [mn, cc] : prods[col].terms()) A[rowidx[mn]][col] = cc;
        for (const auto& [mn, cc] : pd.terms()) b[rowidx[mn]] = cc;
        auto sol = solve(std::move(A), std::move(b));
        if (!sol) throw NotSymmetric("powersum_decompose: no power-sum expansion");
        for (std::size_t i = 0; i < mus.size(); ++i)
            if (!(*sol)[i].is_zero()) out.emplace_back(mus[i], (*sol)[i]);
    }
    return out;
}

enum class GenKind { DunklPower, PolyPower };

/// collapse(sum_i D_i^k) resp. collapse(sum_i pi_i^k), memoized per (N, c).
inline const DiffOp& collapsed_power_sum(GenKind kind, unsigned k, const CouplingParams& prm) {
    static std::map<std::tuple<int, unsigned, std::string>, DiffOp> cache;
    static std::mutex mtx;
    auto key = std::make_tuple(static_cast<int>(kind), k, prm.key());
    {
        std::scoped_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SkewElement sum(prm.N);
    for (std::size_t i = 0; i < prm.N; ++i) {
        SkewElement g = kind == GenKind::DunklPower ? dunkl(i, prm) : polychronakos(i, prm);
        sum += g.pow(k);
    }
    DiffOp val = sum.collapse();
    std::scoped_lock lock(mtx);
    return cache.try_emplace(key, std::move(val)).first->second;
}

namespace detail {
/// Builder memo per (tag, polynomial, params); the builders are pure. The
/// factory runs outside the lock since builders call one another.
inline const DiffOp& memoized_op(const char* tag, const MultiPoly& p, const CouplingParams& prm,
                                 const std::function<DiffOp()>& make) {
    static std::map<std::string, DiffOp> cache;
    static std::mutex mtx;
    std::string key = std::string(tag) + "|" + prm.key() + "|" + std::to_string(p.nvars());
    for (const auto& [mn, c] : p.terms()) {
        key += ";";
        for (std::size_t i = 0; i < p.nvars(); ++i) key += std::to_string(mn.exp(i)) + ",";
        key += c.str();
    }
    {
        std::scoped_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    DiffOp val = make();
    std::scoped_lock lock(mtx);
    return cache.try_emplace(std::move(key), std::move(val)).first->second;
}
} // namespace detail

/// The trigonometric quantum integral: the unique differential operator
/// agreeing with p(pi_1,...,pi_N) on symmetric polynomials.
inline DiffOp build_trig_integral(const MultiPoly& p, const CouplingParams& prm) {
    if (p.nvars() != prm.N) throw std::invalid_argument("build_trig_integral: nvars mismatch");
    return detail::memoized_op("trig", p, prm, [&] {
        DiffOp r(prm.N);
        for (const auto& [mu, coef] : powersum_decompose(p)) {
            DiffOp prod = DiffOp::identity(prm.N);
            for (unsigned part : mu.parts)
                prod = prod.compose(collapsed_power_sum(GenKind::PolyPower, part, prm));
            r += coef * prod;
        }
        return r;
    });
}

/// The rational quantum integral: collapse of p(D_1,...,D_N); constant
/// leading symbol p(d). The Dunkl operators commute, so this one is
/// presentation-independent.
inline DiffOp build_rat_integral(const MultiPoly& p, const CouplingParams& prm) {
    if (p.nvars() != prm.N) throw std::invalid_argument("build_rat_integral: nvars mismatch");
    return detail::memoized_op("rat", p, prm, [&] {
        DiffOp r(prm.N);
        for (const auto& [mu, coef] : powersum_decompose(p)) {
            DiffOp prod = DiffOp::identity(prm.N);
            for (unsigned part : mu.parts)
                prod = prod.compose(collapsed_power_sum(GenKind::DunklPower, part, prm));
            r += coef * prod;
        }
        return r;
    });
}

/// Rational quantum integral L_q for a quasi-invariant q of degree d, by
/// the nested-commutator formula L_q = (2^d d!)^{-1} ad_L^d (q .); the
/// chain terminates because one more commutator vanishes on quasi-invariants.
/// Extends additively over homogeneous parts. For symmetric q this agrees
/// with build_rat_integral; off the symmetric algebra it is the canonical
/// integral, not the collapse of q(D).
inline DiffOp quantum_integral(const MultiPoly& q, const CouplingParams& prm) {
    if (q.nvars() != prm.N) throw std::invalid_argument("quantum_integral: nvars mismatch");
    DiffOp L = cm_operator(prm);
    DiffOp acc(prm.N);
    for (const auto& [d, qd] : q.homogeneous_parts()) {
        DiffOp chain = DiffOp::multiplication(qd);
        Rational coef(1);
        for (int k = 1; k <= d; ++k) {
            chain = L.commutator(chain);
            coef /= Rational(2 * k);
        }
        acc += coef * chain;
    }
    return acc;
}

/// The canonical bilinear form (p,q)_m = (L_p q)(0) on quasi-invariants.
/// Agrees with djo_form when p is symmetric; beyond the symmetric algebra
/// the two differ and this is the pairing dual bases live under. Computed
/// through the binomial expansion of ad_L^d, entirely on polynomials:
/// (L_p q)(0) = (2^d d!)^{-1} sum_k C(d,k) (-1)^{d-k} [L^k (p L^{d-k} q)](0).
inline Rational qm_pairing(const MultiPoly& p, const MultiPoly& q, const CouplingParams& prm) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("qm_pairing: nvars mismatch");
    Rational acc(0);
    for (const auto& [d, pd] : p.homogeneous_parts()) {
        MultiPoly qd = q.homogeneous_part(d);
        if (qd.is_zero()) continue;
        std::vector<MultiPoly> Lq = {qd};
        for (int j = 0; j < d; ++j) Lq.push_back(cm_apply(Lq.back(), prm));
        Rational sum(0);
        for (int k = 0; k <= d; ++k) {
            MultiPoly t = pd * Lq[static_cast<std::size_t>(d - k)];
            for (int j = 0; j < k; ++j) t = cm_apply(t, prm);
            Rational sgn = (d - k) % 2 == 0 ? Rational(1) : Rational(-1);
            sum += sgn * Rational::binomial(static_cast<unsigned long>(d),
                                            static_cast<unsigned long>(k)) *
                   t.constant_term();
        }
        acc += sum / (Rational(2).pow(d) * Rational::factorial(static_cast<unsigned long>(d)));
    }
    return acc;
}

/// Harmonic quantum integral via the nested-commutator sum
/// L_p^H = sum_{k=0}^{deg p} (1/(2^k k!)) [...[L_p, L], ..., L].
inline DiffOp build_harmonic_integral(const MultiPoly& p, const CouplingParams& prm) {
    return detail::memoized_op("harm", p, prm, [&] {
        DiffOp Lp = build_trig_integral(p, prm);
        DiffOp L = cm_operator(prm);
        DiffOp acc = Lp, chain = Lp;
        int d = p.degree();
        Rational coef(1);
        for (int k = 1; k <= d; ++k) {
            chain = chain.commutator(L);
            coef /= Rational(2 * k);
            acc += coef * chain;
        }
        return acc;
    });
}

} // namespace qherm

#endif
