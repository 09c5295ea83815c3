#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "zklat/errors.hpp"
#include "zklat/ring.hpp"

using namespace zklat;

TEST_CASE("modulus construction") {
    CHECK(Modulus::from_k(3).value() == 6);
    CHECK(Modulus(5).value() == 5);
    CHECK(Modulus(6).k() == 3);
    CHECK_THROWS_AS(Modulus(5).k(), DomainError);
    CHECK_THROWS_AS(Modulus(1), InputError);
    CHECK_THROWS_AS(Modulus::from_k(0), InputError);
    CHECK(Modulus(7).reduce(-1) == 6);
    CHECK(Modulus(7).reduce(15) == 1);
}

TEST_CASE("residue vectors validate entries") {
    CHECK_THROWS_AS(ResidueVector(Modulus(4), {0, 4}), InputError);
    CHECK_THROWS_AS(ResidueVector(Modulus(4), {-1}), InputError);
    const std::array<std::int64_t, 3> raw{-1, 9, 4};
    CHECK(ResidueVector::reduced(Modulus(4), raw) == ResidueVector(Modulus(4), {3, 1, 0}));
}

TEST_CASE("lift to balanced representatives") {
    const auto m = Modulus::from_k(3);
    CHECK(rho(0, m) == 0);
    CHECK(rho(2, m) == 2);
    CHECK(rho(3, m) == 3);
    CHECK(rho(4, m) == -2);
    CHECK(rho(5, m) == -1);
    const auto odd = Modulus(5);
    CHECK(rho(2, odd) == 2);
    CHECK(rho(3, odd) == -2);
}

TEST_CASE("euclidean weight examples") {
    const auto m = Modulus::from_k(2);
    CHECK(euclidean_weight(ResidueVector(m, {0, 1, 2, 3})) == 0 + 1 + 4 + 1);
    CHECK(euclidean_weight(ResidueVector(m, {2, 2, 2, 2})) == 16);
    CHECK(euclidean_weight(ResidueVector(Modulus(5), {1, 2, 3, 4})) == 1 + 4 + 4 + 1);
}

TEST_CASE("inner product and mismatches") {
    const auto m = Modulus(6);
    CHECK(inner_product(ResidueVector(m, {1, 2, 3}), ResidueVector(m, {5, 4, 3})) == (5 + 8 + 9) % 6);
    CHECK_THROWS_AS(inner_product(ResidueVector(m, {1}), ResidueVector(m, {1, 2})), InputError);
    CHECK_THROWS_AS(inner_product(ResidueVector(m, {1}), ResidueVector(Modulus(4), {1})), InputError);
    CHECK_THROWS_AS(ResidueVector(m, {1}) + ResidueVector(m, {1, 2}), InputError);
}

TEST_CASE("property: weight equals squared norm of the lift") {
    testing::Gen gen(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Modulus m(gen.uniform(2, 13));
        const auto v = gen.vector(m, static_cast<std::size_t>(gen.uniform(1, 12)));
        std::int64_t sq = 0;
        for (auto x : rho_lift(v)) {
            CHECK(2 * std::abs(x) <= m.value());
            sq += x * x;
        }
        CHECK(euclidean_weight(v) == sq);
        CHECK(euclidean_weight(-v) == sq);
        CHECK(ResidueVector::reduced(m, rho_lift(v)) == v);
    }
}

TEST_CASE("property: inner product is bilinear") {
    testing::Gen gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const Modulus m(gen.uniform(2, 12));
        const auto n = static_cast<std::size_t>(gen.uniform(1, 10));
        const auto u = gen.vector(m, n), v = gen.vector(m, n), w = gen.vector(m, n);
        const auto a = gen.uniform(-20, 20);
        CHECK(inner_product(u + v, w) == m.reduce(inner_product(u, w) + inner_product(v, w)));
        CHECK(inner_product(u.scaled(a), w) == m.reduce(a * inner_product(u, w)));
        CHECK(inner_product(u, w) == inner_product(w, u));
        CHECK((u - u).is_zero());
    }
}
