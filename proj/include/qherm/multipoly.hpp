#ifndef QHERM_MULTIPOLY_HPP
#define QHERM_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace qherm {

/// Sparse exact multivariate polynomial over Rational. Immutable in spirit:
/// all operations return new values. Terms are kept in graded-lex order with
/// no explicit zeros, so equality is map equality and serialization order is
/// canonical. The zero polynomial has an empty term map and degree -1.
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rational>;

    explicit MultiPoly(std::size_t nvars) : nv_(nvars) {
        if (nvars > Mono::kMaxVars)
            throw std::invalid_argument("MultiPoly: more than 8 variables unsupported");
    }

    static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(std::size_t nvars, Rational c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Mono(nvars), std::move(c));
        return p;
    }

    static MultiPoly variable(std::size_t nvars, std::size_t i) {
        return from_term(Mono::unit(nvars, i), Rational(1));
    }

    static MultiPoly from_term(const Mono& m, Rational c) {
        MultiPoly p(m.nvars());
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }

    std::size_t nvars() const { return nv_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    Rational coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Mono(nv_)); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }

    int degree_in(std::size_t i) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp(i)));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.begin()->first.degree();
        return terms_.rbegin()->first.degree() == d;
    }

    const std::pair<const Mono, Rational>& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("MultiPoly: zero has no leading term");
        return *terms_.rbegin();
    }

    void add_term(const Mono& m, const Rational& c) {
        if (m.nvars() != nv_) throw std::invalid_argument("MultiPoly: nvars mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    MultiPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { a *= c; return a; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { a *= c; return a; }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [m, v] : r.terms_) v = -v;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r(a.nv_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(nv_, 1);
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    MultiPoly derivative(std::size_t i) const {
        if (i >= nv_) throw std::out_of_range("MultiPoly: variable index out of range");
        MultiPoly r(nv_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exp(i);
            if (e == 0) continue;
            Mono d = m;
            d.set_exp(i, e - 1);
            r.add_term(d, c * Rational(static_cast<long>(e)));
        }
        return r;
    }

    /// w acting on functions: (w.p)(x) = p(w^{-1} x).
    MultiPoly permuted(const Permutation& w) const {
        if (w.size() != nv_) throw std::invalid_argument("MultiPoly: permutation size mismatch");
        MultiPoly r(nv_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.permuted(w), c);
        return r;
    }

    /// Nonzero homogeneous components, degrees strictly increasing.
    std::vector<std::pair<int, MultiPoly>> homogeneous_parts() const {
        std::vector<std::pair<int, MultiPoly>> parts;
        for (const auto& [m, c] : terms_) {
            int d = static_cast<int>(m.degree());
            if (parts.empty() || parts.back().first != d) parts.emplace_back(d, MultiPoly(nv_));
            parts.back().second.terms_.emplace(m, c);
        }
        return parts;
    }

    MultiPoly homogeneous_part(int d) const {
        MultiPoly r(nv_);
        for (const auto& [m, c] : terms_)
            if (static_cast<int>(m.degree()) == d) r.terms_.emplace(m, c);
        return r;
    }

    /// Exact quotient by d, or nullopt when none exists.
    std::optional<MultiPoly> try_divided_by(const MultiPoly& d) const {
        check_same(d);
        if (d.is_zero()) throw std::invalid_argument("MultiPoly: division by zero polynomial");
        MultiPoly q(nv_), r(*this);
        const auto& [dm, dc] = d.leading_term();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading_term();
            if (!dm.divides(rm)) return std::nullopt;
            Mono tm = rm.divided_by(dm);
            Rational tc = rc / dc;
            q.add_term(tm, tc);
            r -= MultiPoly::from_term(tm, tc) * d;
        }
        return q;
    }

    MultiPoly divided_by(const MultiPoly& d) const {
        auto q = try_divided_by(d);
        if (!q) throw NotDivisible("no exact quotient");
        return *std::move(q);
    }

    /// Normal form modulo the principal ideal (d) under the graded-lex
    /// order; linear in *this, zero iff divisible.
    MultiPoly remainder_mod(const MultiPoly& d) const {
        check_same(d);
        if (d.is_zero()) throw std::invalid_argument("MultiPoly: division by zero polynomial");
        MultiPoly rem(nv_), r(*this);
        const auto& [dm, dc] = d.leading_term();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading_term();
            if (dm.divides(rm)) {
                Mono tm = rm.divided_by(dm);
                r -= MultiPoly::from_term(tm, rc / dc) * d;
            } else {
                rem.add_term(rm, rc);
                r.terms_.erase(std::prev(r.terms_.end()));
            }
        }
        return rem;
    }

    bool divisible_by(const MultiPoly& d) const { return try_divided_by(d).has_value(); }

    /// Substitutes polynomial `value` for variable i (value in same ring).
    MultiPoly substituted(std::size_t i, const MultiPoly& value) const {
        check_same(value);
        if (i >= nv_) throw std::out_of_range("MultiPoly: variable index out of range");
        // group by exponent of x_i, then Horner over decreasing exponent
        std::map<unsigned, MultiPoly> slices;
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exp(i);
            Mono rest = m;
            rest.set_exp(i, 0);
            auto [it, ins] = slices.try_emplace(e, MultiPoly(nv_));
            it->second.add_term(rest, c);
        }
        MultiPoly r(nv_);
        unsigned prev = 0;
        bool first = true;
        for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
            if (first) {
                r = it->second;
                prev = it->first;
                first = false;
                continue;
            }
            for (unsigned k = it->first; k < prev; ++k) r = r * value;
            prev = it->first;
            r += it->second;
        }
        if (!first)
            for (unsigned k = 0; k < prev; ++k) r = r * value;
        return r;
    }

    /// Moves every variable i to slot target[i] of a new_nvars ring; distinct
    /// variables may map to the same slot (their exponents add).
    MultiPoly remapped(const std::vector<std::size_t>& target, std::size_t new_nvars) const {
        if (target.size() != nv_) throw std::invalid_argument("MultiPoly: remap size mismatch");
        MultiPoly r(new_nvars);
        for (const auto& [m, c] : terms_) {
            Mono t(new_nvars);
            for (std::size_t i = 0; i < nv_; ++i) {
                std::size_t j = target[i];
                if (j >= new_nvars) throw std::out_of_range("MultiPoly: remap target out of range");
                unsigned e = t.exp(j) + m.exp(i);
                if (e > Mono::kMaxExp) throw std::overflow_error("MultiPoly: exponent overflow");
                t.set_exp(j, e);
            }
            r.add_term(t, c);
        }
        return r;
    }

    /// Embeds into a larger ring, variable i -> offset+i.
    MultiPoly embedded(std::size_t new_nvars, std::size_t offset) const {
        std::vector<std::size_t> target(nv_);
        for (std::size_t i = 0; i < nv_; ++i) target[i] = offset + i;
        return remapped(target, new_nvars);
    }

    /// Sets the variables listed in `vars` to zero.
    MultiPoly with_vars_zeroed(const std::vector<std::size_t>& vars) const {
        MultiPoly r(nv_);
        for (const auto& [m, c] : terms_) {
            bool keep = true;
            for (std::size_t v : vars)
                if (m.exp(v) > 0) { keep = false; break; }
            if (keep) r.terms_.emplace(m, c);
        }
        return r;
    }

    /// Evaluates at a rational point.
    Rational eval(const std::vector<Rational>& x) const {
        if (x.size() != nv_) throw std::invalid_argument("MultiPoly: point size mismatch");
        Rational sum(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nv_; ++i) t *= x[i].pow(m.exp(i));
            sum += t;
        }
        return sum;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nv_ == b.nv_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            if (!first) os << (c.sign() < 0 ? " - " : " + ");
            else if (c.sign() < 0) os << "-";
            first = false;
            Rational a = c.sign() < 0 ? -c : c;
            std::string mono;
            for (std::size_t i = 0; i < nv_; ++i) {
                unsigned e = m.exp(i);
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) os << a.str();
            else if (a.is_one()) os << mono;
            else os << a.str() << "*" << mono;
        }
        return os.str();
    }

private:
    void check_same(const MultiPoly& o) const {
        if (o.nv_ != nv_) throw std::invalid_argument("MultiPoly: nvars mismatch");
    }

    std::size_t nv_;
    TermMap terms_;
};

inline MultiPoly root_form(std::size_t nvars, std::size_t i, std::size_t j) {
    MultiPoly p = MultiPoly::variable(nvars, i);
    p -= MultiPoly::variable(nvars, j);
    return p;
}

} // namespace qherm

#endif
