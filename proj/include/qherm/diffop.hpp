#ifndef QHERM_DIFFOP_HPP
#define QHERM_DIFFOP_HPP

#include <json.hpp>

#include <map>

#include "poly_json.hpp"
#include "ratfn.hpp"

namespace qherm {

/// Differential operator sum_beta c_beta(x) d^beta with RationalFn
/// coefficients, beta a derivative multi-index. Canonical merged form,
/// no zero coefficients.
class DiffOp {
public:
    using TermMap = std::map<Mono, RationalFn>;

    explicit DiffOp(std::size_t nvars) : nv_(nvars) {}

    static DiffOp zero(std::size_t nvars) { return DiffOp(nvars); }

    static DiffOp identity(std::size_t nvars) {
        return from_term(Mono(nvars), RationalFn(MultiPoly::constant(nvars, 1)));
    }

    static DiffOp from_term(const Mono& beta, RationalFn coeff) {
        DiffOp d(beta.nvars());
        d.add_term(beta, std::move(coeff));
        return d;
    }

    /// Multiplication operator f -> c*f.
    static DiffOp multiplication(const MultiPoly& c) {
        return from_term(Mono(c.nvars()), RationalFn(c));
    }

    static DiffOp partial(std::size_t nvars, std::size_t i) {
        return from_term(Mono::unit(nvars, i), RationalFn(MultiPoly::constant(nvars, 1)));
    }

    static DiffOp euler(std::size_t nvars) {
        DiffOp d(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            d.add_term(Mono::unit(nvars, i), RationalFn(MultiPoly::variable(nvars, i)));
        return d;
    }

    static DiffOp laplacian(std::size_t nvars) {
        DiffOp d(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            d.add_term(Mono::unit(nvars, i, 2), RationalFn(MultiPoly::constant(nvars, 1)));
        return d;
    }

    std::size_t nvars() const { return nv_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int order() const {
        int o = -1;
        for (const auto& [b, c] : terms_) o = std::max(o, static_cast<int>(b.degree()));
        return o;
    }

    void add_term(const Mono& beta, const RationalFn& coeff) {
        if (beta.nvars() != nv_) throw std::invalid_argument("DiffOp: nvars mismatch");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(beta, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffOp& operator+=(const DiffOp& o) {
        check_same(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }

    DiffOp& operator-=(const DiffOp& o) {
        check_same(o);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    DiffOp& operator*=(const Rational& c) {
        if (c.is_zero()) terms_.clear();
        else
            for (auto& [b, v] : terms_) v *= c;
        return *this;
    }

    friend DiffOp operator+(DiffOp a, const DiffOp& b) { a += b; return a; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { a -= b; return a; }
    friend DiffOp operator*(DiffOp a, const Rational& c) { a *= c; return a; }
    friend DiffOp operator*(const Rational& c, DiffOp a) { a *= c; return a; }
    DiffOp operator-() const { DiffOp r(*this); for (auto& [b, v] : r.terms_) v = -v; return r; }

    RationalFn apply(const MultiPoly& f) const { return apply(RationalFn(f)); }

    RationalFn apply(const RationalFn& f) const {
        if (f.nvars() != nv_) throw std::invalid_argument("DiffOp: nvars mismatch");
        RationalFn acc = RationalFn::zero(nv_);
        for (const auto& [beta, c] : terms_) {
            RationalFn g = f;
            for (std::size_t i = 0; i < nv_; ++i)
                for (unsigned k = 0; k < beta.exp(i); ++k) g = g.derivative(i);
            acc += c * g;
        }
        return acc;
    }

    /// Applies and requires a polynomial image.
    MultiPoly apply_poly(const MultiPoly& f) const { return apply(f).to_poly(); }

    /// Symbolic composition (this after o) by the Leibniz rule.
    DiffOp compose(const DiffOp& o) const {
        check_same(o);
        DiffOp r(nv_);
        for (const auto& [ba, ca] : terms_) {
            for (const auto& [bb, cb] : o.terms_) {
                // d^ba (cb d^bb .) = sum_{g <= ba} binom(ba, g) (d^g cb) d^{ba-g+bb}
                foreach_sub(ba, [&](const Mono& g, const Rational& binom) {
                    RationalFn dcb = cb;
                    for (std::size_t i = 0; i < nv_; ++i)
                        for (unsigned k = 0; k < g.exp(i); ++k) dcb = dcb.derivative(i);
                    if (dcb.is_zero()) return;
                    r.add_term(ba.divided_by(g).times(bb), (ca * dcb) * binom);
                });
            }
        }
        return r;
    }

    DiffOp commutator(const DiffOp& o) const { return compose(o) - o.compose(*this); }

    /// Conjugation by w: returns w . this . w^{-1}.
    DiffOp permuted(const Permutation& w) const {
        DiffOp r(nv_);
        for (const auto& [b, c] : terms_) r.add_term(b.permuted(w), c.permuted(w));
        return r;
    }

    DiffOp embedded(std::size_t new_nvars, std::size_t offset) const {
        DiffOp r(new_nvars);
        for (const auto& [b, c] : terms_) {
            Mono nb(new_nvars);
            for (std::size_t i = 0; i < nv_; ++i) nb.set_exp(offset + i, b.exp(i));
            r.add_term(nb, c.embedded(new_nvars, offset));
        }
        return r;
    }

    /// Applies this operator (acting on the x-block of variables, one block
    /// of size nvars() at `x_offset` inside P's ring) to P * exp(sum x_i d_i)
    /// where d_i is the variable at dual_offset + i; returns the cofactor of
    /// the exponential, i.e. every derivative is shifted d_i -> d_i + dual_i.
    RationalFn conj_exp_apply(const MultiPoly& P, std::size_t x_offset,
                              std::size_t dual_offset) const {
        std::size_t big = P.nvars();
        RationalFn acc = RationalFn::zero(big);
        for (const auto& [beta, c] : terms_) {
            MultiPoly g = P;
            for (std::size_t i = 0; i < nv_; ++i) {
                unsigned b = beta.exp(i);
                if (b == 0) continue;
                MultiPoly dual = MultiPoly::variable(big, dual_offset + i);
                MultiPoly h(big);
                // (d + dual)^b g expanded binomially; d and dual commute
                MultiPoly dk = g;
                for (unsigned t = 0; t <= b; ++t) {
                    h += Rational::binomial(b, t) * (dual.pow(b - t) * dk);
                    if (t < b) dk = dk.derivative(x_offset + i);
                }
                g = std::move(h);
            }
            acc += c.embedded(big, x_offset) * g;
        }
        return acc;
    }

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.nv_ == b.nv_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [b, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "[" + c.str(names) + "]";
            for (std::size_t i = 0; i < nv_; ++i) {
                unsigned e = b.exp(i);
                if (e == 0) continue;
                s += " d" + std::to_string(i + 1);
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    nlohmann::json to_json(std::vector<std::string> vars = {}) const;

private:
    template <typename F>
    void foreach_sub(const Mono& beta, F&& fn) const {
        // iterate all g <= beta componentwise along with prod binom(beta_i, g_i)
        Mono g(nv_);
        rec_sub(beta, g, 0, Rational(1), fn);
    }

    template <typename F>
    void rec_sub(const Mono& beta, Mono& g, std::size_t i, Rational binom, F&& fn) const {
        if (i == nv_) {
            fn(g, binom);
            return;
        }
        for (unsigned t = 0; t <= beta.exp(i); ++t) {
            g.set_exp(i, t);
            rec_sub(beta, g, i + 1, binom * Rational::binomial(beta.exp(i), t), fn);
        }
        g.set_exp(i, 0);
    }

    void check_same(const DiffOp& o) const {
        if (o.nv_ != nv_) throw std::invalid_argument("DiffOp: nvars mismatch");
    }

    std::size_t nv_;
    TermMap terms_;
};

/// {"terms": [{"d": [...], "num": <poly>, "den": [{"pair": [i,j], "pow": k}]}]},
/// pairs 1-based in the file.
inline nlohmann::json DiffOp::to_json(std::vector<std::string> vars) const {
    if (vars.empty()) vars = default_var_names(nv_);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [b, c] : terms_) {
        nlohmann::json t;
        t["d"] = b.exponents();
        t["num"] = poly_to_json(c.numerator(), vars);
        nlohmann::json den = nlohmann::json::array();
        for (const auto& [pair, pow] : c.denominator())
            den.push_back({{"pair", {pair.first + 1, pair.second + 1}}, {"pow", pow}});
        t["den"] = std::move(den);
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"terms", terms}};
}

inline DiffOp diffop_from_json(const nlohmann::json& j) {
    const auto& terms = j.at("terms");
    if (terms.empty()) throw std::invalid_argument("diffop_from_json: cannot infer nvars");
    MultiPoly first_num = poly_from_json(terms.front().at("num"));
    DiffOp d(first_num.nvars());
    for (const auto& t : terms) {
        std::vector<unsigned> e;
        for (const auto& x : t.at("d")) e.push_back(x.get<unsigned>());
        MultiPoly num = poly_from_json(t.at("num"));
        RationalFn::DenMap den;
        for (const auto& f : t.at("den")) {
            unsigned a = f.at("pair").at(0).get<unsigned>() - 1;
            unsigned b = f.at("pair").at(1).get<unsigned>() - 1;
            den[{a, b}] = f.at("pow").get<unsigned>();
        }
        d.add_term(Mono::from_exponents(e), RationalFn(std::move(num), std::move(den)));
    }
    return d;
}

} // namespace qherm

#endif
