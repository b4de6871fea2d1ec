// qherm: compute and verify the exact operator calculus of the type-A
// rational/trigonometric Calogero-Moser correspondence.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <qherm/cache.hpp>
#include <qherm/verify.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qherm;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out;
};

void emit(const std::string& payload, const OutputOptions& opt) {
    if (opt.out.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream f(opt.out, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
        f << payload << "\n";
    }
}

Rational parse_coupling(const std::string& s) { return Rational::parse(s); }

Partition parse_partition(const std::string& s) {
    std::vector<unsigned> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    return Partition(parts);
}

std::string poly_csv(const MultiPoly& p, const std::string& name) {
    std::string s;
    for (const auto& [mn, c] : p.terms()) {
        s += name;
        for (std::size_t i = 0; i < p.nvars(); ++i) s += "," + std::to_string(mn.exp(i));
        s += "," + c.str() + "\n";
    }
    return s;
}

std::string csv_header(const std::vector<std::string>& vars) {
    std::string s = "name";
    for (const auto& v : vars) s += ",deg_" + v;
    return s + ",coeff\n";
}

std::string poly_latex(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mn, c] = *it;
        Rational a = c.sign() < 0 ? -c : c;
        s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            unsigned e = mn.exp(i);
            if (e == 0) continue;
            mono += vars[i];
            if (e > 1) mono += "^{" + std::to_string(e) + "}";
            mono += " ";
        }
        if (!mono.empty() && mono.back() == ' ') mono.pop_back();
        std::string coef;
        if (!a.is_integer())
            coef = "\\tfrac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
        else
            coef = a.str();
        if (mono.empty()) s += coef;
        else if (a.is_one()) s += mono;
        else s += coef + " " + mono;
    }
    return s;
}

struct Table {
    std::vector<std::pair<std::string, MultiPoly>> rows;
    std::vector<std::string> vars;
    nlohmann::json meta;
};

std::string render(const Table& t, const OutputOptions& opt) {
    if (opt.format == "json") {
        nlohmann::json j;
        j["meta"] = t.meta;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [name, p] : t.rows)
            rows.push_back({{"name", name}, {"poly", poly_to_json(p, t.vars)}});
        j["rows"] = std::move(rows);
        return j.dump(2);
    }
    if (opt.format == "csv") {
        std::string s = csv_header(t.vars);
        for (const auto& [name, p] : t.rows) s += poly_csv(p, name);
        if (!s.empty() && s.back() == '\n') s.pop_back();
        return s;
    }
    // latex
    std::string s;
    for (const auto& [name, p] : t.rows) s += name + " = " + poly_latex(p, t.vars) + "\n";
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Calogero-Moser operator calculus and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opt;
    app.add_option("--format", opt.format, "output format: json, csv, latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    app.add_option("--out", opt.out, "write output to this file instead of stdout");

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "cache directory (default: QHERM_CACHE_DIR or ~/.cache/qherm)");
    std::string profile_str = "desk";
    app.add_option("--profile", profile_str, "desk or extended")
        ->check(CLI::IsMember({"desk", "extended"}));

    // ---------------- compute ----------------
    auto* compute = app.add_subcommand("compute", "compute a polynomial family");
    std::string family;
    compute
        ->add_option("family", family,
                     "hermite1d, hermite-multi, jack, gould-hopper, qbasis, ba, deformed-newton")
        ->required()
        ->check(CLI::IsMember({"hermite1d", "hermite-multi", "jack", "gould-hopper", "qbasis",
                               "ba", "deformed-newton"}));
    std::size_t nvar = 2;
    std::string m_str = "1", alpha_str, tau_str = "-1", k_str = "2", lambda_str;
    unsigned deg = 6, n_max = 10, ell = 1, r_max = 4;
    std::size_t n1 = 1, n2 = 1;
    compute->add_option("--n", nvar, "number of variables N");
    compute->add_option("--m", m_str, "coupling (integer or rational p/q)");
    compute->add_option("--deg", deg, "degree");
    compute->add_option("--n-max", n_max, "largest index n");
    compute->add_option("--lambda", lambda_str, "partition, e.g. 3,1");
    compute->add_option("--alpha", alpha_str, "Jack parameter alpha (rational)");
    compute->add_option("--l", ell, "degree of the gamma polynomial");
    compute->add_option("--tau", tau_str, "tau coefficient (rational)");
    compute->add_option("--k", k_str, "deformation parameter k (rational)");
    compute->add_option("--n1", n1, "first species count");
    compute->add_option("--n2", n2, "second species count");
    compute->add_option("--r-max", r_max, "largest Newton sum index");

    // ---------------- verify ----------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string suite_help = "all";
    for (const auto& s : verify::suite_names()) suite_help += ", " + s;
    verify_cmd->add_option("suite", suite, suite_help)->required();
    long l_max = 4;
    verify_cmd->add_option("--l-max", l_max, "largest l for the jordan suite");

    // ---------------- cache ----------------
    auto* cache_cmd = app.add_subcommand("cache", "manage the on-disk basis cache");
    std::string action;
    cache_cmd->add_option("action", action, "status, clear or warm")
        ->required()
        ->check(CLI::IsMember({"status", "clear", "warm"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CacheStore cache(cache_dir.empty() ? CacheStore::default_root()
                                           : std::filesystem::path(cache_dir));

        if (*compute) {
            Table t;
            if (family == "hermite1d") {
                long m = parse_coupling(m_str).as_long();
                t.vars = {"x"};
                t.meta = {{"family", "hermite1d"}, {"m", m}, {"n_max", n_max}};
                if (opt.format == "latex") {
                    std::string s;
                    for (unsigned n = 0; n <= n_max; ++n) s += mhermite_latex(m, n) + "\n";
                    if (!s.empty()) s.pop_back();
                    emit(s, opt);
                    return 0;
                }
                for (unsigned n = 0; n <= n_max; ++n) {
                    auto h = mhermite(m, n, MHermiteStrategy::Recurrence);
                    t.rows.emplace_back(
                        "H_{" + std::to_string(n) + "}^{(" + std::to_string(m) + ")}", h.H);
                }
            } else if (family == "hermite-multi") {
                long m = parse_coupling(m_str).as_long();
                Partition lam = parse_partition(lambda_str);
                MultiPoly H = symmetric_mhermite(lam, m, nvar);
                t.vars = default_var_names(nvar);
                t.meta = {{"family", "hermite-multi"},
                          {"n", nvar},
                          {"m", m},
                          {"lambda", lam.str()}};
                t.rows.emplace_back("H_" + lam.str() + "^{(" + std::to_string(m) + ")}", H);
            } else if (family == "jack") {
                Rational alpha = alpha_str.empty() ? -parse_coupling(m_str).inverse()
                                                   : Rational::parse(alpha_str);
                Partition lam = parse_partition(lambda_str);
                MultiPoly P = jack(lam, alpha, nvar);
                t.vars = default_var_names(nvar);
                t.meta = {{"family", "jack"},
                          {"n", nvar},
                          {"alpha", alpha.str()},
                          {"lambda", lam.str()}};
                t.rows.emplace_back("P_" + lam.str(), P);
            } else if (family == "gould-hopper") {
                Rational tau = Rational::parse(tau_str);
                t.vars = {"x"};
                t.meta = {{"family", "gould-hopper"},
                          {"l", ell},
                          {"tau", tau.str()},
                          {"n_max", n_max}};
                for (unsigned n = 0; n <= n_max; ++n)
                    t.rows.emplace_back("P_" + std::to_string(n), gould_hopper(n, ell, tau));
            } else if (family == "qbasis") {
                long m = parse_coupling(m_str).as_long();
                CouplingParams prm(nvar, m);
                Rational phi00 = berest_ba(prm).phi00;
                t.vars = default_var_names(nvar);
                t.meta = {{"family", "qbasis"},
                          {"n", nvar},
                          {"m", m},
                          {"deg", deg},
                          {"phi00", phi00.str()}};
                auto lvl = cache.level(prm, deg, phi00);
                for (std::size_t i = 0; i < lvl.basis.size(); ++i)
                    t.rows.emplace_back("q_" + std::to_string(i + 1), lvl.basis[i]);
                for (std::size_t i = 0; i < lvl.dual.size(); ++i)
                    t.rows.emplace_back("q^" + std::to_string(i + 1), lvl.dual[i]);
            } else if (family == "ba") {
                long m = parse_coupling(m_str).as_long();
                BAFunction ba = berest_ba(CouplingParams(nvar, m));
                if (opt.format == "json") {
                    emit(ba_to_json(ba).dump(2), opt);
                    return 0;
                }
                t.vars = ba_var_names(nvar);
                t.meta = {{"family", "ba"}, {"n", nvar}, {"m", m}, {"phi00", ba.phi00.str()}};
                t.rows.emplace_back("P", ba.P);
            } else { // deformed-newton
                Rational k = Rational::parse(k_str);
                DeformedParams dp(n1, n2, k);
                t.vars = dp.var_names();
                t.meta = {{"family", "deformed-newton"},
                          {"n1", n1},
                          {"n2", n2},
                          {"k", k.str()},
                          {"r_max", r_max}};
                for (unsigned r = 0; r <= r_max; ++r)
                    t.rows.emplace_back("p_" + std::to_string(r), deformed_newton(r, dp));
            }
            emit(render(t, opt), opt);
            return 0;
        }

        if (*verify_cmd) {
            verify::Profile profile =
                profile_str == "desk" ? verify::Profile::Desk : verify::Profile::Extended;
            std::vector<verify::Suite> suites;
            if (suite == "all") {
                suites = verify::run_all(profile, &cache);
            } else if (suite == "jordan") {
                verify::Suite s;
                s.name = "jordan";
                s.checks.push_back(verify::jordan_check(l_max));
                suites.push_back(std::move(s));
            } else {
                suites.push_back(verify::run_suite(suite, profile, &cache));
            }
            nlohmann::json rep = verify::report_json(suites, profile);
            emit(rep.dump(2), opt);
            return rep["pass"].get<bool>() ? 0 : 1;
        }

        if (*cache_cmd) {
            if (action == "status") {
                auto names = cache.entries();
                nlohmann::json j;
                j["root"] = cache.root().string();
                j["entries"] = names;
                emit(j.dump(2), opt);
            } else if (action == "clear") {
                std::size_t removed = cache.clear();
                emit(nlohmann::json{{"removed", removed}}.dump(2), opt);
            } else {
                cache.warm();
                emit(nlohmann::json{{"warmed", true}, {"entries", cache.entries().size()}}.dump(2),
                     opt);
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
