// Acceptance harness: runs every acceptance criterion with its runtime
// budget and prints one pass/fail line per criterion. Exit code 0 iff all
// criteria (and the total runtime budget) hold.

#include <qherm/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace qherm;
using verify::Check;

namespace {

struct Criterion {
    int id;
    const char* label;
    double budget_seconds; // 0 = no individual budget
    std::function<std::vector<Check>()> run;
};

int failures = 0;

void report(const Criterion& cr, const std::vector<Check>& checks, double secs) {
    bool pass = true;
    std::string why;
    for (const auto& c : checks)
        if (!c.pass) {
            pass = false;
            why += c.name + ": " + (c.detail.empty() ? "failed" : c.detail) + " ";
        }
    if (cr.budget_seconds > 0 && secs > cr.budget_seconds) {
        pass = false;
        why += "runtime " + std::to_string(secs) + "s exceeds budget " +
               std::to_string(cr.budget_seconds) + "s ";
    }
    if (!pass) ++failures;
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", cr.id, cr.label,
                secs, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
}

} // namespace

int main() {
    auto single = [](Check c) { return std::vector<Check>{std::move(c)}; };

    std::vector<Criterion> criteria = {
        {1, "m-hermite golden table H_0..H_10 at m=1", 1.0,
         [&] { return single(verify::golden_table_check()); }},
        {2, "three-way cross-construction m<=3 n<=12 and classical table", 5.0,
         [&] { return single(verify::cross_construction_check()); }},
        {3, "integrality of monic parts m<=3 n<=20", 0,
         [&] { return single(verify::integrality_check()); }},
        {4, "laguerre relations on both branches m<=3 n<=8", 0,
         [&] { return single(verify::laguerre_check()); }},
        {5, "BA axioms, eigen equations and symmetry for (2,1),(2,2),(3,1)", 120.0,
         [&] { return single(verify::ba_axioms_check(verify::Profile::Desk)); }},
        {6, "collapse identities E, H_N, L at N=2,3", 0,
         [&] { return single(verify::collapse_check()); }},
        {7, "commutator series: momentum case and conjugation agreement", 0,
         [&] { return single(verify::bch_check()); }},
        {8, "intertwining for p_1,p_2,p_3 on bases to degree 6, N=2,3", 300.0,
         [&] {
             return std::vector<Check>{verify::intertwine_check(2, 6),
                                       verify::intertwine_check(3, 6)};
         }},
        {9, "harmonic integrals commute, couplings 1, 2, 1/2", 0,
         [&] { return single(verify::commute_check()); }},
        {10, "eigen equations for L^H (deg<=8) and K_gamma (deg<=6)", 0,
         [&] {
             return std::vector<Check>{verify::hermite_eigen_check(),
                                       verify::kgamma_eigen_check()};
         }},
        {11, "jack (3,1) coefficients at m=2,3 and the pole at m=1", 0,
         [&] { return single(verify::jack_check()); }},
        {12, "jordan block identities l=1..4", 0,
         [&] { return single(verify::jordan_check(4)); }},
        {13, "dual-basis expansion matches the BA function to degree 6", 0,
         [&] { return single(verify::expansion_check(nullptr)); }},
        {14, "bispectral recurrences and k! p_k^1 = H_k^{(1)}", 0,
         [&] { return single(verify::bispectral_check()); }},
        {15, "deformed operators, restriction routes, eigen and membership", 0,
         [&] { return single(verify::deformed_check()); }},
        {16, "zero-coupling hermitisation factors into classical hermites", 0,
         [&] { return single(verify::product_hermite_check()); }},
    };

    auto t0 = std::chrono::steady_clock::now();
    for (const auto& cr : criteria) {
        auto s0 = std::chrono::steady_clock::now();
        std::vector<Check> checks = cr.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
        report(cr, checks, secs);
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool budget_ok = total < 900.0;
    if (!budget_ok) ++failures;
    std::printf("%s total runtime %.2fs (budget 900s)\n", budget_ok ? "PASS" : "FAIL", total);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
