#ifndef QHERM_QUASINV_HPP
#define QHERM_QUASINV_HPP

#include <json.hpp>

#include <map>
#include <vector>

#include "cherednik.hpp"
#include "poly_json.hpp"

namespace qherm {

/// A_m(x) = prod_{i<j} (x_i - x_j)^m.
inline MultiPoly arrangement_poly(const CouplingParams& prm) {
    long m = prm.multiplicity();
    MultiPoly a = MultiPoly::constant(prm.N, 1);
    for (std::size_t i = 0; i < prm.N; ++i)
        for (std::size_t j = i + 1; j < prm.N; ++j)
            a = a * root_form(prm.N, i, j).pow(static_cast<unsigned>(m));
    return a;
}

/// q is m-quasi-invariant iff q - s_ij q is divisible by (x_i-x_j)^{2m+1}
/// for every pair.
inline bool is_quasi_invariant(const MultiPoly& p, long m) {
    if (m < 0) throw std::invalid_argument("is_quasi_invariant: m >= 0 required");
    std::size_t N = p.nvars();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            MultiPoly diff = p - p.permuted(Permutation::transposition(N, i, j));
            if (diff.is_zero()) continue;
            if (!diff.divisible_by(root_form(N, i, j).pow(static_cast<unsigned>(2 * m + 1))))
                return false;
        }
    return true;
}

inline std::vector<Mono> monomials_of_degree(std::size_t N, unsigned d) {
    std::vector<Mono> out;
    std::vector<unsigned> e(N, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == N) {
            e[i] = left;
            out.push_back(Mono::from_exponents(e));
            e[i] = 0;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    if (N == 0) return out;
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

/// Basis of the homogeneous quasi-invariants Q_m[d], by exact nullspace of
/// the divisibility constraints. Deterministic output (ascending graded-lex
/// free columns, integer-primitive vectors).
inline std::vector<MultiPoly> qbasis(std::size_t N, long m, unsigned d) {
    if (m < 0) throw std::invalid_argument("qbasis: m >= 0 required");
    auto monos = monomials_of_degree(N, d);
    std::size_t cols = monos.size();
    Matrix A;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            if (m == 0) continue; // antisymmetric part always divisible once
            MultiPoly divisor = root_form(N, i, j).pow(static_cast<unsigned>(2 * m + 1));
            Permutation s = Permutation::transposition(N, i, j);
            std::map<Mono, std::size_t> rowidx;
            std::vector<std::map<std::size_t, Rational>> colvals(cols);
            for (std::size_t c = 0; c < cols; ++c) {
                MultiPoly mono = MultiPoly::from_term(monos[c], Rational(1));
                MultiPoly rem = (mono - mono.permuted(s)).remainder_mod(divisor);
                for (const auto& [mn, cc] : rem.terms()) {
                    auto [it, ins] = rowidx.try_emplace(mn, rowidx.size());
                    colvals[c][it->second] = cc;
                }
            }
            std::size_t base = A.size();
            A.resize(base + rowidx.size(), std::vector<Rational>(cols, Rational(0)));
            for (std::size_t c = 0; c < cols; ++c)
                for (const auto& [r, v] : colvals[c]) A[base + r][c] = v;
        }
    auto null = nullspace(std::move(A), cols);
    std::vector<MultiPoly> basis;
    basis.reserve(null.size());
    for (const auto& v : null) {
        MultiPoly p(N);
        for (std::size_t c = 0; c < cols; ++c) p.add_term(monos[c], v[c]);
        basis.push_back(std::move(p));
    }
    return basis;
}

/// One graded slice of Q_m with its Gram data under the Dunkl pairing and
/// the phi(0,0)-normalized dual basis.
struct GradedLevel {
    unsigned degree = 0;
    std::vector<MultiPoly> basis;
    Matrix gram;                  // G_ij = [q_i, q_j]
    std::vector<MultiPoly> dual;  // [q_i, q^j] = phi00 * delta_ij
};

/// Per-degree quasi-invariant bases with duals; phi00 is the BA value at
/// the origin supplied by the Baker-Akhiezer module.
struct GradedBasis {
    std::size_t N = 0;
    long m = 0;
    Rational phi00;
    std::map<unsigned, GradedLevel> levels;

    const GradedLevel& level(unsigned d) const {
        auto it = levels.find(d);
        if (it == levels.end()) throw std::out_of_range("GradedBasis: degree not built");
        return it->second;
    }
};

/// Gram matrix of the canonical pairing (p,q)_m = (L_p q)(0). On symmetric
/// polynomials this coincides with djo_form; on general quasi-invariants
/// only the canonical pairing makes the dual bases match the BA expansion.
inline Matrix gram_matrix(const std::vector<MultiPoly>& basis, const CouplingParams& prm) {
    std::size_t n = basis.size();
    Matrix g(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = qm_pairing(basis[i], basis[j], prm);
            g[j][i] = g[i][j];
        }
    return g;
}

/// Dual vectors q^j = phi00 * sum_k (G^{-1})_{jk} q_k. The normalization
/// needs phi(0,0) != 0; it holds in every instance built here but is
/// checked rather than assumed.
inline std::vector<MultiPoly> dual_basis(const std::vector<MultiPoly>& basis, const Matrix& gram,
                                         const Rational& phi00, std::size_t N) {
    if (phi00.is_zero()) throw Error("dual_basis: phi(0,0) vanished, duals are undefined");
    auto inv = inverse(gram);
    if (!inv) throw SingularGram("dual_basis: Gram matrix is singular");
    std::vector<MultiPoly> dual;
    dual.reserve(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        MultiPoly d(N);
        for (std::size_t k = 0; k < basis.size(); ++k) d += (*inv)[j][k] * basis[k];
        d *= phi00;
        dual.push_back(std::move(d));
    }
    return dual;
}

inline GradedLevel build_graded_level(const CouplingParams& prm, unsigned d,
                                      const Rational& phi00) {
    GradedLevel lvl;
    lvl.degree = d;
    lvl.basis = qbasis(prm.N, prm.multiplicity(), d);
    lvl.gram = gram_matrix(lvl.basis, prm);
    lvl.dual = dual_basis(lvl.basis, lvl.gram, phi00, prm.N);
    return lvl;
}

inline nlohmann::json graded_level_to_json(const GradedBasis& gb, const GradedLevel& lvl) {
    nlohmann::json j;
    j["n"] = gb.N;
    j["m"] = gb.m;
    j["deg"] = lvl.degree;
    j["phi00"] = gb.phi00.str();
    auto polys = [](const std::vector<MultiPoly>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back(poly_to_json(p));
        return a;
    };
    j["basis"] = polys(lvl.basis);
    j["dual"] = polys(lvl.dual);
    nlohmann::json g = nlohmann::json::array();
    for (const auto& row : lvl.gram) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.str());
        g.push_back(std::move(r));
    }
    j["gram"] = std::move(g);
    return j;
}

inline GradedLevel graded_level_from_json(const nlohmann::json& j) {
    GradedLevel lvl;
    lvl.degree = j.at("deg").get<unsigned>();
    for (const auto& p : j.at("basis")) lvl.basis.push_back(poly_from_json(p));
    for (const auto& p : j.at("dual")) lvl.dual.push_back(poly_from_json(p));
    for (const auto& row : j.at("gram")) {
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(Rational::parse(x.get<std::string>()));
        lvl.gram.push_back(std::move(r));
    }
    return lvl;
}

} // namespace qherm

#endif
