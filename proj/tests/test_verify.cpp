#include <catch_amalgamated.hpp>

#include <qherm/cache.hpp>
#include <qherm/verify.hpp>

#include <filesystem>

using namespace qherm;

TEST_CASE("suites are known and reports are deterministic") {
    auto s1 = verify::run_suite("jordan", verify::Profile::Desk);
    auto s2 = verify::run_suite("jordan", verify::Profile::Desk);
    CHECK(s1.pass());
    CHECK(verify::report_json({s1}, verify::Profile::Desk).dump() ==
          verify::report_json({s2}, verify::Profile::Desk).dump());
    CHECK_THROWS_AS(verify::run_suite("nonsense", verify::Profile::Desk),
                    std::invalid_argument);
}

TEST_CASE("fast criterion checks pass") {
    CHECK(verify::golden_table_check().pass);
    CHECK(verify::cross_construction_check().pass);
    CHECK(verify::integrality_check().pass);
    CHECK(verify::laguerre_check().pass);
    CHECK(verify::collapse_check().pass);
    CHECK(verify::jack_check().pass);
    CHECK(verify::jordan_check(4).pass);
    CHECK(verify::gould_hopper_check().pass);
    CHECK(verify::bispectral_check().pass);
}

TEST_CASE("report shape carries anchor strings") {
    auto s = verify::run_suite("jack", verify::Profile::Desk);
    auto j = verify::report_json({s}, verify::Profile::Desk);
    REQUIRE(j["suites"].size() == 1);
    REQUIRE(j["suites"][0]["checks"].size() >= 1);
    for (const auto& c : j["suites"][0]["checks"]) {
        CHECK(c.contains("anchor"));
        CHECK_FALSE(c["anchor"].get<std::string>().empty());
    }
    CHECK(j["pass"].get<bool>());
}

TEST_CASE("cache store round trips levels") {
    auto tmp = std::filesystem::temp_directory_path() /
               ("qherm-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(tmp);
    CacheStore cache(tmp);
    CouplingParams prm(2, 1);
    Rational phi00(-2);
    auto lvl = cache.level(prm, 3, phi00);
    CHECK(std::filesystem::exists(cache.level_path(2, 1, 3)));
    auto lvl2 = cache.level(prm, 3, phi00); // from disk
    CHECK(lvl2.basis == lvl.basis);
    CHECK(lvl2.dual == lvl.dual);
    CHECK(lvl2.gram == lvl.gram);
    CHECK(cache.entries().size() == 1);
    CHECK(cache.clear() == 1);
    CHECK(cache.entries().empty());
    std::filesystem::remove_all(tmp);
}
