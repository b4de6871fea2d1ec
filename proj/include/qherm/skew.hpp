#ifndef QHERM_SKEW_HPP
#define QHERM_SKEW_HPP

#include <map>

#include "diffop.hpp"

namespace qherm {

/// Element of the skew algebra: a formal sum of D_w . w with D_w a DiffOp
/// and w a permutation acting first. The representation is normal-ordered by
/// construction; composition rewrites w . D -> D^w . w on the fly.
class SkewElement {
public:
    using PartMap = std::map<Permutation, DiffOp>;

    explicit SkewElement(std::size_t nvars) : nv_(nvars) {}

    static SkewElement zero(std::size_t nvars) { return SkewElement(nvars); }

    static SkewElement from_diffop(const DiffOp& d) {
        SkewElement e(d.nvars());
        e.add_part(Permutation::identity(d.nvars()), d);
        return e;
    }

    static SkewElement from_permutation(std::size_t nvars, const Permutation& w) {
        SkewElement e(nvars);
        e.add_part(w, DiffOp::identity(nvars));
        return e;
    }

    static SkewElement identity(std::size_t nvars) {
        return from_diffop(DiffOp::identity(nvars));
    }

    std::size_t nvars() const { return nv_; }
    const PartMap& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    void add_part(const Permutation& w, const DiffOp& d) {
        if (w.size() != nv_ || d.nvars() != nv_)
            throw std::invalid_argument("SkewElement: nvars mismatch");
        if (d.is_zero()) return;
        auto [it, inserted] = parts_.emplace(w, d);
        if (!inserted) {
            it->second += d;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }

    SkewElement& operator+=(const SkewElement& o) {
        check_same(o);
        for (const auto& [w, d] : o.parts_) add_part(w, d);
        return *this;
    }

    SkewElement& operator-=(const SkewElement& o) {
        check_same(o);
        for (const auto& [w, d] : o.parts_) add_part(w, -d);
        return *this;
    }

    SkewElement& operator*=(const Rational& c) {
        if (c.is_zero()) parts_.clear();
        else
            for (auto& [w, d] : parts_) d *= c;
        return *this;
    }

    friend SkewElement operator+(SkewElement a, const SkewElement& b) { a += b; return a; }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) { a -= b; return a; }
    friend SkewElement operator*(SkewElement a, const Rational& c) { a *= c; return a; }
    friend SkewElement operator*(const Rational& c, SkewElement a) { a *= c; return a; }
    SkewElement operator-() const {
        SkewElement r(*this);
        for (auto& [w, d] : r.parts_) d = -d;
        return r;
    }

    /// Composition: (A.w)(B.v) = (A compose B^w).(w v).
    SkewElement compose(const SkewElement& o) const {
        check_same(o);
        SkewElement r(nv_);
        for (const auto& [w, A] : parts_)
            for (const auto& [v, B] : o.parts_) r.add_part(w * v, A.compose(B.permuted(w)));
        return r;
    }

    SkewElement commutator(const SkewElement& o) const {
        return compose(o) - o.compose(*this);
    }

    SkewElement pow(unsigned e) const {
        SkewElement r = identity(nv_);
        for (unsigned i = 0; i < e; ++i) r = r.compose(*this);
        return r;
    }

    RationalFn apply(const MultiPoly& f) const {
        RationalFn acc = RationalFn::zero(nv_);
        for (const auto& [w, d] : parts_) acc += d.apply(f.permuted(w));
        return acc;
    }

    MultiPoly apply_poly(const MultiPoly& f) const { return apply(f).to_poly(); }

    /// w . e . w^{-1}.
    SkewElement conjugated(const Permutation& w) const {
        SkewElement r(nv_);
        Permutation winv = w.inverse();
        for (const auto& [v, d] : parts_) r.add_part(w * v * winv, d.permuted(w));
        return r;
    }

    /// Commutes with the S_N action; checked on adjacent transpositions,
    /// which generate.
    bool is_invariant() const {
        for (std::size_t k = 0; k + 1 < nv_; ++k) {
            if (conjugated(Permutation::transposition(nv_, k, k + 1)) != *this) return false;
        }
        return true;
    }

    /// The unique differential operator agreeing with this element on
    /// symmetric polynomials: drop every permutation factor.
    DiffOp collapse() const {
        if (!is_invariant()) throw NotInvariant("collapse: element is not S_N-invariant");
        DiffOp r(nv_);
        for (const auto& [w, d] : parts_) r += d;
        return r;
    }

    /// Applies this element to Q * exp(-x^2/2) and returns the cofactor of
    /// the Gaussian: every d_i acts as d_i - x_i, permutations act on Q.
    MultiPoly gaussian_apply(const MultiPoly& Q) const {
        RationalFn acc = RationalFn::zero(nv_);
        for (const auto& [w, d] : parts_) {
            MultiPoly g = Q.permuted(w);
            for (const auto& [beta, c] : d.terms()) {
                MultiPoly h = g;
                for (std::size_t i = 0; i < nv_; ++i)
                    for (unsigned k = 0; k < beta.exp(i); ++k)
                        h = h.derivative(i) - MultiPoly::variable(nv_, i) * h;
                acc += c * h;
            }
        }
        return acc.to_poly();
    }

    friend bool operator==(const SkewElement& a, const SkewElement& b) {
        return a.nv_ == b.nv_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const SkewElement& a, const SkewElement& b) { return !(a == b); }

private:
    void check_same(const SkewElement& o) const {
        if (o.nv_ != nv_) throw std::invalid_argument("SkewElement: nvars mismatch");
    }

    std::size_t nv_;
    PartMap parts_;
};

} // namespace qherm

#endif
