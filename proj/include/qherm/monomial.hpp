#ifndef QHERM_MONOMIAL_HPP
#define QHERM_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qherm {

/// Permutation of variable indices 0..n-1, stored by images.
class Permutation {
public:
    explicit Permutation(std::size_t n) : img_(n) {
        std::iota(img_.begin(), img_.end(), std::uint8_t{0});
    }

    static Permutation identity(std::size_t n) { return Permutation(n); }

    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
        Permutation w(n);
        if (i >= n || j >= n) throw std::out_of_range("Permutation: index out of range");
        std::swap(w.img_[i], w.img_[j]);
        return w;
    }

    static Permutation from_images(std::vector<std::size_t> images) {
        Permutation w(images.size());
        std::vector<bool> seen(images.size(), false);
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i] >= images.size() || seen[images[i]])
                throw std::invalid_argument("Permutation: images not a bijection");
            seen[images[i]] = true;
            w.img_[i] = static_cast<std::uint8_t>(images[i]);
        }
        return w;
    }

    std::size_t size() const { return img_.size(); }
    std::size_t operator()(std::size_t i) const { return img_[i]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation w(size());
        for (std::size_t i = 0; i < size(); ++i) w.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return w;
    }

    /// Composition (a*b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
        Permutation w(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) w.img_[i] = a.img_[b.img_[i]];
        return w;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<std::uint8_t> img_;
};

/// Exponent vector packed into a 64-bit word, one byte per variable with
/// variable 0 in the most significant byte. Ordering is graded lex.
/// Caps: at most 8 variables, each exponent < 256; the whole artifact
/// works in at most 2N <= 8 variables at desk-scale degrees.
class Mono {
public:
    static constexpr std::size_t kMaxVars = 8;
    static constexpr unsigned kMaxExp = 255;

    explicit Mono(std::size_t nvars) : bits_(0), deg_(0), nv_(checked_nvars(nvars)) {}

    Mono(std::size_t nvars, std::initializer_list<unsigned> exps) : Mono(nvars) {
        if (exps.size() != nvars) throw std::invalid_argument("Mono: exponent count mismatch");
        std::size_t i = 0;
        for (unsigned e : exps) set_exp(i++, e);
    }

    static Mono from_exponents(const std::vector<unsigned>& e) {
        Mono m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) m.set_exp(i, e[i]);
        return m;
    }

    static Mono unit(std::size_t nvars, std::size_t i, unsigned e = 1) {
        Mono m(nvars);
        m.set_exp(i, e);
        return m;
    }

    std::size_t nvars() const { return nv_; }
    unsigned degree() const { return deg_; }

    unsigned exp(std::size_t i) const {
        check_index(i);
        return static_cast<unsigned>((bits_ >> shift(i)) & 0xffu);
    }

    void set_exp(std::size_t i, unsigned e) {
        check_index(i);
        if (e > kMaxExp) throw std::overflow_error("Mono: exponent exceeds 255");
        unsigned old = exp_unchecked(i);
        bits_ = (bits_ & ~(std::uint64_t{0xff} << shift(i))) | (std::uint64_t{e} << shift(i));
        deg_ = deg_ - old + e;
    }

    std::vector<unsigned> exponents() const {
        std::vector<unsigned> e(nv_);
        for (std::size_t i = 0; i < nv_; ++i) e[i] = exp_unchecked(i);
        return e;
    }

    bool is_constant() const { return deg_ == 0; }

    Mono times(const Mono& o) const {
        check_same(o);
        Mono m(*this);
        for (std::size_t i = 0; i < nv_; ++i) {
            unsigned e = exp_unchecked(i) + o.exp_unchecked(i);
            if (e > kMaxExp) throw std::overflow_error("Mono: exponent exceeds 255");
            m.set_exp(i, e);
        }
        return m;
    }

    /// True when this divides o exponentwise.
    bool divides(const Mono& o) const {
        check_same(o);
        for (std::size_t i = 0; i < nv_; ++i)
            if (exp_unchecked(i) > o.exp_unchecked(i)) return false;
        return true;
    }

    /// Exponentwise quotient *this / o; requires o.divides(*this).
    Mono divided_by(const Mono& o) const {
        check_same(o);
        Mono m(nv_);
        for (std::size_t i = 0; i < nv_; ++i) {
            unsigned a = exp_unchecked(i), b = o.exp_unchecked(i);
            if (b > a) throw std::invalid_argument("Mono: not divisible");
            m.set_exp(i, a - b);
        }
        return m;
    }

    /// Image under w acting by x -> w(x): exponent of var w(i) becomes exp(i).
    Mono permuted(const Permutation& w) const {
        if (w.size() != nv_) throw std::invalid_argument("Mono: permutation size mismatch");
        Mono m(nv_);
        for (std::size_t i = 0; i < nv_; ++i) m.set_exp(w(i), exp_unchecked(i));
        return m;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < nv_; ++i) {
            unsigned e = exp_unchecked(i);
            if (e == 0) continue;
            if (!s.empty()) s += '*';
            s += "x" + std::to_string(i + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

    friend bool operator==(const Mono& a, const Mono& b) {
        return a.nv_ == b.nv_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

    /// Graded lexicographic: lower total degree first, then lex with
    /// variable 0 most significant.
    friend bool operator<(const Mono& a, const Mono& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
        return a.bits_ < b.bits_;
    }

private:
    static std::uint8_t checked_nvars(std::size_t n) {
        if (n > kMaxVars) throw std::invalid_argument("Mono: more than 8 variables unsupported");
        return static_cast<std::uint8_t>(n);
    }
    static constexpr unsigned shift(std::size_t i) { return 8 * (7 - static_cast<unsigned>(i)); }
    unsigned exp_unchecked(std::size_t i) const {
        return static_cast<unsigned>((bits_ >> shift(i)) & 0xffu);
    }
    void check_index(std::size_t i) const {
        if (i >= nv_) throw std::out_of_range("Mono: variable index out of range");
    }
    void check_same(const Mono& o) const {
        if (o.nv_ != nv_) throw std::invalid_argument("Mono: nvars mismatch");
    }

    std::uint64_t bits_;
    std::uint32_t deg_;
    std::uint8_t nv_;
};

} // namespace qherm

#endif
