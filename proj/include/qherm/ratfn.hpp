#ifndef QHERM_RATFN_HPP
#define QHERM_RATFN_HPP

#include <map>
#include <utility>

#include "errors.hpp"
#include "multipoly.hpp"

namespace qherm {

/// Rational function whose denominator is a product of root linear forms
/// (x_i - x_j), i < j. That is the only pole structure the operators here
/// ever produce; anything else is a hard error. Kept reduced: the numerator
/// is not divisible by any stored root factor.
class RationalFn {
public:
    using DenMap = std::map<std::pair<unsigned, unsigned>, unsigned>;

    explicit RationalFn(MultiPoly num) : num_(std::move(num)) {}

    RationalFn(MultiPoly num, DenMap den) : num_(std::move(num)), den_(std::move(den)) {
        validate();
        reduce();
    }

    static RationalFn zero(std::size_t nvars) { return RationalFn(MultiPoly::zero(nvars)); }

    std::size_t nvars() const { return num_.nvars(); }
    const MultiPoly& numerator() const { return num_; }
    const DenMap& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    MultiPoly denominator_poly() const {
        MultiPoly d = MultiPoly::constant(nvars(), 1);
        for (const auto& [pair, pow] : den_)
            d = d * root_form(nvars(), pair.first, pair.second).pow(pow);
        return d;
    }

    const MultiPoly& to_poly() const {
        if (!den_.empty()) throw NotDivisible("RationalFn: denominator did not cancel");
        return num_;
    }

    RationalFn& operator*=(const Rational& c) {
        num_ *= c;
        if (num_.is_zero()) den_.clear();
        return *this;
    }

    friend RationalFn operator*(RationalFn f, const Rational& c) { f *= c; return f; }
    friend RationalFn operator*(const Rational& c, RationalFn f) { f *= c; return f; }

    RationalFn operator-() const {
        RationalFn r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        RationalFn r(a.num_ * b.num_);
        if (r.num_.is_zero()) return r;
        r.den_ = a.den_;
        for (const auto& [pair, pow] : b.den_) r.den_[pair] += pow;
        // both factors reduced and root forms are prime, so r is reduced
        return r;
    }

    friend RationalFn operator*(const RationalFn& a, const MultiPoly& p) {
        RationalFn r(a.num_ * p);
        r.den_ = a.den_;
        r.reduce();
        return r;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.nvars() != b.nvars()) throw std::invalid_argument("RationalFn: nvars mismatch");
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        DenMap common = a.den_;
        for (const auto& [pair, pow] : b.den_) {
            auto it = common.find(pair);
            if (it == common.end()) common.emplace(pair, pow);
            else it->second = std::max(it->second, pow);
        }
        MultiPoly na = a.num_, nb = b.num_;
        for (const auto& [pair, pow] : common) {
            unsigned pa = 0, pb = 0;
            if (auto it = a.den_.find(pair); it != a.den_.end()) pa = it->second;
            if (auto it = b.den_.find(pair); it != b.den_.end()) pb = it->second;
            MultiPoly f = root_form(a.nvars(), pair.first, pair.second);
            if (pow > pa) na = na * f.pow(pow - pa);
            if (pow > pb) nb = nb * f.pow(pow - pb);
        }
        RationalFn r(na + nb);
        r.den_ = std::move(common);
        r.reduce();
        return r;
    }

    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

    RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
    RationalFn& operator-=(const RationalFn& o) { *this = *this - o; return *this; }

    /// Divides by the root form x_i - x_j (i != j; either order, sign handled).
    RationalFn divided_by_root(std::size_t i, std::size_t j) const {
        bool flip = i > j;
        if (flip) std::swap(i, j);
        if (i == j || j >= nvars()) throw std::invalid_argument("RationalFn: bad root pair");
        RationalFn r(*this);
        if (flip) r.num_ = -r.num_;
        if (r.num_.is_zero()) return r;
        r.den_[{static_cast<unsigned>(i), static_cast<unsigned>(j)}] += 1;
        r.reduce();
        return r;
    }

    RationalFn derivative(std::size_t v) const {
        // d/dv [ n / prod f_r^{k_r} ]
        //   = [ n' prod f_r - n sum_r k_r (d f_r/dv) prod_{s != r} f_s ] / prod f_r^{k_r+1}
        if (den_.empty()) return RationalFn(num_.derivative(v));
        MultiPoly acc = num_.derivative(v);
        for (const auto& [pair, pow] : den_)
            acc = acc * root_form(nvars(), pair.first, pair.second);
        for (const auto& [pair, pow] : den_) {
            int df = 0;
            if (pair.first == v) df = 1;
            else if (pair.second == v) df = -1;
            if (df == 0) continue;
            MultiPoly piece = num_ * Rational(-static_cast<long>(pow) * df);
            for (const auto& [p2, pow2] : den_)
                if (p2 != pair) piece = piece * root_form(nvars(), p2.first, p2.second);
            acc += piece;
        }
        RationalFn r(std::move(acc));
        r.den_ = den_;
        for (auto& [pair, pow] : r.den_) pow += 1;
        if (r.num_.is_zero()) r.den_.clear();
        r.reduce();
        return r;
    }

    /// (w.f)(x) = f(w^{-1} x); root factors map to root factors up to sign.
    RationalFn permuted(const Permutation& w) const {
        RationalFn r(num_.permuted(w));
        int sign = 1;
        for (const auto& [pair, pow] : den_) {
            unsigned a = static_cast<unsigned>(w(pair.first));
            unsigned b = static_cast<unsigned>(w(pair.second));
            if (a > b) {
                std::swap(a, b);
                if (pow % 2 == 1) sign = -sign;
            }
            r.den_[{a, b}] += pow;
        }
        if (sign < 0) r.num_ = -r.num_;
        return r;
    }

    /// Embeds into a larger ring at variable offset.
    RationalFn embedded(std::size_t new_nvars, std::size_t offset) const {
        RationalFn r(num_.embedded(new_nvars, offset));
        for (const auto& [pair, pow] : den_)
            r.den_[{static_cast<unsigned>(pair.first + offset),
                    static_cast<unsigned>(pair.second + offset)}] = pow;
        return r;
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (den_.empty()) return num_.str(names);
        std::string s = "(" + num_.str(names) + ") / (";
        bool first = true;
        for (const auto& [pair, pow] : den_) {
            if (!first) s += "*";
            first = false;
            s += "(" + root_form(nvars(), pair.first, pair.second).str(names) + ")";
            if (pow > 1) s += "^" + std::to_string(pow);
        }
        return s + ")";
    }

private:
    void validate() const {
        for (const auto& [pair, pow] : den_) {
            if (pair.first >= pair.second || pair.second >= nvars() || pow == 0)
                throw std::invalid_argument("RationalFn: malformed denominator");
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            MultiPoly f = root_form(nvars(), it->first.first, it->first.second);
            while (it->second > 0) {
                auto q = num_.try_divided_by(f);
                if (!q) break;
                num_ = *std::move(q);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    MultiPoly num_;
    DenMap den_;
};

} // namespace qherm

#endif
