#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "zklat/catalog.hpp"
#include "zklat/errors.hpp"

using namespace zklat;

TEST_CASE("bundled catalog contents") {
    const auto cat = Catalog::bundled();
    CHECK(cat.entries().size() == 14);
    CHECK(!cat.version().empty());
    CHECK(cat.version() == Catalog::bundled().version());
    for (const char* name : {"C_{8,56}", "C_{8,64}", "C_{10,56}", "C_{10,64}", "C_{12,32}", "C_{12,40}", "C_{12,56}"}) {
        const auto& e = cat.find(name);
        CHECK(e.claims.self_dual);
        CHECK(e.claims.type_ii);
        CHECK(e.claims.extremal == std::optional<bool>(true));
    }
    const auto& odd = cat.find("C_{5,48}");
    CHECK(odd.modulus().value() == 5);
    CHECK(odd.length() == 48);
    CHECK(!odd.claims.extremal.has_value());
    CHECK_THROWS_AS(cat.find("NoSuchCode"), NotFoundError);
    CHECK(cat.try_find("NoSuchCode") == nullptr);
}

TEST_CASE("catalog codes satisfy their claims") {
    const auto cat = Catalog::bundled();
    for (const auto& e : cat.entries()) {
        CAPTURE(e.name);
        const auto c = e.code();
        CHECK(is_self_dual(c) == e.claims.self_dual);
        CHECK(is_type_ii(c) == e.claims.type_ii);
    }
}

TEST_CASE("seed codes are extremal") {
    const auto cat = Catalog::bundled();
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto c = cat.seed_for(k).code();
        CHECK(c.modulus().value() == 2 * k);
        CHECK(c.length() == 8);
        CHECK(min_euclidean_weight_bruteforce(c) == 4 * k);
        CHECK(is_extremal(c, 4 * k));
    }
    CHECK_THROWS_AS(cat.seed_for(9), NotFoundError);
}

TEST_CASE("json round trip") {
    const auto cat = Catalog::bundled();
    const auto again = Catalog::from_json(cat.to_json());
    REQUIRE(again.entries().size() == cat.entries().size());
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        CHECK(again.entries()[i].name == cat.entries()[i].name);
        CHECK(again.entries()[i].spec == cat.entries()[i].spec);
        CHECK(again.entries()[i].claims.extremal == cat.entries()[i].claims.extremal);
    }
}

TEST_CASE("malformed catalogs") {
    CHECK_THROWS_AS(Catalog::from_text("{"), InputError);
    CHECK_THROWS_AS(Catalog::from_text("{}"), InputError);
    CHECK_THROWS_AS(Catalog::from_text(R"([{"name":"x","k":2,"modulus":6,"rows_a":[1],"rows_b":[0]}])"), InputError);
    CHECK_THROWS_AS(Catalog::from_text(R"([{"name":"x","k":2,"rows_a":[9],"rows_b":[0]}])"), InputError);
    const auto dup = R"([{"name":"x","k":1,"rows_a":[1,1],"rows_b":[0,1],"claims":{}},)"
                     R"({"name":"x","k":1,"rows_a":[1,1],"rows_b":[0,1],"claims":{}}])";
    CHECK_THROWS_AS(Catalog::from_text(dup), InputError);
    CHECK_THROWS_AS(Catalog::from_file("/nonexistent/catalog.json"), NotFoundError);
}

TEST_CASE("environment override") {
    const auto path = std::filesystem::temp_directory_path() / "zklat_test_catalog.json";
    {
        std::ofstream out(path);
        out << R"([{"name":"tiny","k":1,"rows_a":[1,1],"rows_b":[0,1],"claims":{"self_dual":true,"type_ii":true}}])";
    }
    ::setenv("ZKLAT_CATALOG", path.c_str(), 1);
    const auto cat = Catalog::load_default();
    ::unsetenv("ZKLAT_CATALOG");
    REQUIRE(cat.entries().size() == 1);
    CHECK(cat.find("tiny").length() == 8);
    CHECK(cat.version() != Catalog::bundled().version());
    CHECK(Catalog::load_default().entries().size() == 14);
    std::filesystem::remove(path);
}
