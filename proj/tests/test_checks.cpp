#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "sl2coh/checks.hpp"

using namespace sl2coh;

TEST_CASE("registry names are unique and resolvable") {
    std::set<std::string> names;
    for (const auto& d : check_registry()) {
        CHECK(names.insert(d.name).second);
        CHECK(find_check(d.name) == &d);
        CHECK(!d.claim.empty());
    }
    CHECK(find_check("no.such.check") == nullptr);
    CHECK_THROWS_AS(run_check("no.such.check", {}), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs") {
    CheckParams params;
    params.r_max = 4;
    RunReport a = run_check("identities.minimal-polynomial", params);
    RunReport b = run_check("identities.minimal-polynomial", params);
    CHECK(a.to_json() == b.to_json());

    params = CheckParams{};
    params.D = 3;
    params.E = 3;
    RunReport c = run_check("g.h1-stabilization", params);
    RunReport d = run_check("g.h1-stabilization", params);
    CHECK(c.to_json() == d.to_json());
}

TEST_CASE("cache round trip is coherent") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sl2coh-cache-test";
    fs::remove_all(dir);

    CheckParams params;
    params.D = 4;
    RunReport fresh = run_check("grosshans.steps", params);
    cache_store(dir.string(), fresh);

    RunReport loaded;
    REQUIRE(cache_load(dir.string(), "grosshans.steps", params, loaded));
    CHECK(loaded.to_json() == fresh.to_json());

    // a different parameter set misses
    CheckParams other = params;
    other.D = 5;
    RunReport miss;
    CHECK(!cache_load(dir.string(), "grosshans.steps", other, miss));
    fs::remove_all(dir);
}

TEST_CASE("cache keys separate checks and parameters") {
    CheckParams a, b;
    b.D = 5;
    CHECK(cache_key("x", a) != cache_key("x", b));
    CHECK(cache_key("x", a) != cache_key("y", a));
    CHECK(cache_key("x", a) == cache_key("x", a));
}

TEST_CASE("every check passes at quick bounds") {
    for (const auto& d : check_registry()) {
        RunReport rep = run_check(d.name, d.quick);
        INFO(d.name);
        CHECK(rep.status == Status::pass);
    }
}
