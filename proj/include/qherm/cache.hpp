#ifndef QHERM_CACHE_HPP
#define QHERM_CACHE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "bafn.hpp"
#include "quasinv.hpp"

namespace qherm {

/// Disk cache for graded quasi-invariant bases, one JSON file per
/// (N, m, degree). Writes are write-then-rename so concurrent readers never
/// observe partial files.
class CacheStore {
public:
    explicit CacheStore(std::filesystem::path root) : root_(std::move(root)) {}

    static std::filesystem::path default_root() {
        if (const char* env = std::getenv("QHERM_CACHE_DIR")) return env;
        if (const char* home = std::getenv("HOME"))
            return std::filesystem::path(home) / ".cache" / "qherm";
        return std::filesystem::path(".qherm-cache");
    }

    const std::filesystem::path& root() const { return root_; }

    std::filesystem::path level_path(std::size_t N, long m, unsigned d) const {
        return root_ / ("qbasis_N" + std::to_string(N) + "_m" + std::to_string(m) + "_d" +
                        std::to_string(d) + ".json");
    }

    /// Loads the level if cached, otherwise computes and stores it.
    GradedLevel level(const CouplingParams& prm, unsigned d, const Rational& phi00) {
        long m = prm.multiplicity();
        auto path = level_path(prm.N, m, d);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            nlohmann::json j = nlohmann::json::parse(in);
            if (j.at("phi00").get<std::string>() == phi00.str()) return graded_level_from_json(j);
        }
        GradedLevel lvl = build_graded_level(prm, d, phi00);
        GradedBasis gb;
        gb.N = prm.N;
        gb.m = m;
        gb.phi00 = phi00;
        write_atomic(path, graded_level_to_json(gb, lvl).dump(2));
        return lvl;
    }

    GradedBasis graded_basis(const CouplingParams& prm, unsigned dmax) {
        GradedBasis gb;
        gb.N = prm.N;
        gb.m = prm.multiplicity();
        gb.phi00 = berest_ba(prm).phi00;
        for (unsigned d = 0; d <= dmax; ++d) gb.levels[d] = level(prm, d, gb.phi00);
        return gb;
    }

    std::vector<std::string> entries() const {
        std::vector<std::string> names;
        if (!std::filesystem::exists(root_)) return names;
        for (const auto& e : std::filesystem::directory_iterator(root_))
            if (e.is_regular_file() && e.path().extension() == ".json")
                names.push_back(e.path().filename().string());
        std::sort(names.begin(), names.end());
        return names;
    }

    std::size_t clear() {
        std::size_t removed = 0;
        if (!std::filesystem::exists(root_)) return removed;
        for (const auto& e : std::filesystem::directory_iterator(root_))
            if (e.is_regular_file() && e.path().extension() == ".json") {
                std::filesystem::remove(e.path());
                ++removed;
            }
        return removed;
    }

    /// Precompute the desk profile: N in {2,3}, m in {1,2}, degrees <= 8.
    void warm() {
        for (std::size_t N : {2u, 3u})
            for (long m : {1L, 2L}) {
                CouplingParams prm(N, m);
                Rational phi00 = berest_ba(prm).phi00;
                for (unsigned d = 0; d <= 8; ++d) level(prm, d, phi00);
            }
    }

private:
    void write_atomic(const std::filesystem::path& path, const std::string& payload) {
        std::filesystem::create_directories(path.parent_path());
        static std::mt19937_64 rng(std::random_device{}());
        auto tmp = path;
        tmp += ".tmp" + std::to_string(rng());
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << payload;
        }
        std::filesystem::rename(tmp, path);
    }

    std::filesystem::path root_;
};

} // namespace qherm

#endif
