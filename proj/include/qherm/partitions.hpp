#ifndef QHERM_PARTITIONS_HPP
#define QHERM_PARTITIONS_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "multipoly.hpp"

namespace qherm {

/// Weakly decreasing positive parts; the empty partition is allowed.
struct Partition {
    std::vector<unsigned> parts;

    Partition() = default;
    Partition(std::initializer_list<unsigned> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<unsigned> p) : parts(std::move(p)) { normalize(); }

    void normalize() {
        if (!std::is_sorted(parts.rbegin(), parts.rend()))
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    unsigned weight() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
    std::size_t length() const { return parts.size(); }
    unsigned part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

/// All partitions of d with at most max_len parts, each part at most
/// max_part. Deterministic (reverse lex) order.
inline std::vector<Partition> partitions_of(unsigned d, std::size_t max_len, unsigned max_part) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (cur.size() == max_len) return;
        for (unsigned p = std::min(cap, left); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

/// mu <= lam in dominance order (same weight assumed).
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
    unsigned pa = 0, pb = 0;
    std::size_t n = std::max(mu.length(), lam.length());
    for (std::size_t i = 0; i < n; ++i) {
        pa += mu.part(i);
        pb += lam.part(i);
        if (pa > pb) return false;
    }
    return true;
}

/// Monomial symmetric polynomial m_lam in N variables (zero when the
/// partition is longer than N).
inline MultiPoly monomial_symmetric(std::size_t N, const Partition& lam) {
    MultiPoly r(N);
    if (lam.length() > N) return r;
    std::vector<unsigned> e(N, 0);
    std::copy(lam.parts.begin(), lam.parts.end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
        r.add_term(Mono::from_exponents(e), Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

inline MultiPoly power_sum(std::size_t N, unsigned k) {
    MultiPoly r(N);
    if (k == 0) return MultiPoly::constant(N, Rational(static_cast<long>(N)));
    for (std::size_t i = 0; i < N; ++i) r.add_term(Mono::unit(N, i, k), Rational(1));
    return r;
}

} // namespace qherm

#endif
