#ifndef QHERM_POLY_JSON_HPP
#define QHERM_POLY_JSON_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "multipoly.hpp"

namespace qherm {

inline std::vector<std::string> default_var_names(std::size_t n, const std::string& stem = "x") {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i + 1));
    return v;
}

/// {"vars": ["x1",...], "terms": [{"e": [...], "c": "a/b"}, ...]}
/// Terms come out in graded-lex order, so round-trips are bit-exact.
inline nlohmann::json poly_to_json(const MultiPoly& p, std::vector<std::string> vars = {}) {
    if (vars.empty()) vars = default_var_names(p.nvars());
    if (vars.size() != p.nvars())
        throw std::invalid_argument("poly_to_json: variable name count mismatch");
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        t["e"] = m.exponents();
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"vars", vars}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const nlohmann::json& j) {
    const auto& vars = j.at("vars");
    MultiPoly p(vars.size());
    for (const auto& t : j.at("terms")) {
        const auto& ev = t.at("e");
        if (ev.size() != vars.size())
            throw std::invalid_argument("poly_from_json: exponent length mismatch");
        std::vector<unsigned> e;
        e.reserve(ev.size());
        for (const auto& x : ev) e.push_back(x.get<unsigned>());
        p.add_term(Mono::from_exponents(e), Rational::parse(t.at("c").get<std::string>()));
    }
    return p;
}

} // namespace qherm

#endif
