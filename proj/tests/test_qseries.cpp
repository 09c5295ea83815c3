#include <doctest.h>

#include "generators.hpp"
#include "zklat/errors.hpp"
#include "zklat/qseries.hpp"

using namespace zklat;

namespace {

QSeries random_series(testing::Gen& gen, std::int64_t d, std::int64_t p, bool unit = false) {
    QSeries s(d, p);
    for (std::int64_t i = 0; i <= p; ++i) s.set(i, gen.uniform(-9, 9));
    if (unit) s.set(0, 1);
    return s;
}

// Schoolbook product truncated to `p`, independent of the valuation bookkeeping.
QSeries naive_product(const QSeries& a, const QSeries& b, std::int64_t p) {
    QSeries out(a.denominator(), p);
    for (std::int64_t i = 0; i <= p; ++i)
        for (std::int64_t j = 0; i + j <= p; ++j) out.add(i + j, a.coefficient(i) * b.coefficient(j));
    return out;
}

}  // namespace

TEST_CASE("construction and access") {
    auto s = QSeries::from_coefficients(2, {1, 0, 3});
    CHECK(s.precision() == 2);
    CHECK(s.precision_exponent() == 1);
    CHECK(s.at(1) == 3);
    CHECK(s.at(1, 2) == 0);
    CHECK(s.coefficient(-1) == 0);
    CHECK_THROWS_AS(s.coefficient(3), ResourceError);
    CHECK_THROWS_AS(s.set(5, 1), InputError);
    CHECK_THROWS_AS(QSeries(0, 3), InputError);
    CHECK(s.valuation() == 0);
    CHECK(QSeries(1, 4).is_zero());
    CHECK(!QSeries(1, 4).valuation().has_value());
}

TEST_CASE("rendering") {
    const auto s = QSeries::from_coefficients(2, {1, 0, -3, 2});
    CHECK(s.to_string() == "1 - 3·q + 2·q^(3/2) + O(q^2)");
    CHECK(QSeries(1, 2).to_string() == "0 + O(q^3)");
    const auto j = s.to_json();
    CHECK(j["denominator"] == 2);
    CHECK(j["terms"][1][1] == "-3");
    CHECK(QSeries::from_json(j).agrees_with(s));
}

TEST_CASE("denominators") {
    const auto s = QSeries::from_coefficients(1, {1, 2, 3});
    const auto t = s.with_denominator(3);
    CHECK(t.denominator() == 3);
    CHECK(t.precision() == 6);
    CHECK(t.coefficient(3) == 2);
    CHECK(t.coefficient(4) == 0);
    const auto r = t.reduced();
    CHECK(r.denominator() == 1);
    CHECK(r.agrees_with(s));
    CHECK_THROWS_AS(t.with_denominator(4), InputError);
    CHECK_THROWS_AS(s + t, InputError);
}

TEST_CASE("reciprocal") {
    const auto s = QSeries::from_coefficients(1, {1, -1, 0, 0, 0});
    const auto inv = s.reciprocal();
    for (std::int64_t i = 0; i <= 4; ++i) CHECK(inv.coefficient(i) == 1);
    CHECK_THROWS_AS(QSeries::from_coefficients(1, {2, 1}).reciprocal(), DomainError);
    CHECK((s.pow(-3) * s.pow(3)).truncated(4).agrees_with(QSeries::constant(1, 4, 1)));
}

TEST_CASE("property: products match schoolbook multiplication") {
    testing::Gen gen(71);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = gen.uniform(1, 4);
        const auto p = gen.uniform(0, 12);
        const auto a = random_series(gen, d, p), b = random_series(gen, d, p);
        CHECK((a * b).truncated(p).agrees_with(naive_product(a, b, p)));
        CHECK((a * b).agrees_with(b * a));
    }
}

TEST_CASE("property: truncation commutes with arithmetic") {
    testing::Gen gen(72);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = gen.uniform(2, 15);
        const auto lo = gen.uniform(0, p);
        const auto a = random_series(gen, 1, p, true), b = random_series(gen, 1, p);
        CHECK((a * b).truncated(lo).agrees_with(a.truncated(lo) * b.truncated(lo)));
        CHECK((a + b).truncated(lo).agrees_with(a.truncated(lo) + b.truncated(lo)));
        CHECK(a.pow(5).truncated(lo).agrees_with(a.truncated(lo).pow(5).truncated(lo)));
        CHECK(a.reciprocal().truncated(lo).agrees_with(a.truncated(lo).reciprocal()));
    }
}

TEST_CASE("property: powers add exponents") {
    testing::Gen gen(73);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(gen, 2, 10, true);
        const auto i = gen.uniform(-3, 4), j = gen.uniform(-3, 4);
        CHECK(a.pow(i + j).agrees_with(a.pow(i) * a.pow(j)));
    }
}

TEST_CASE("valuation extends product precision") {
    const auto q2 = QSeries::from_coefficients(1, {0, 0, 1, 0, 0});
    const auto s = QSeries::from_coefficients(1, {1, 1, 1});
    const auto p = q2 * s;
    CHECK(p.precision() == 4);
    CHECK(p.coefficient(4) == 1);
    CHECK((QSeries::from_coefficients(1, {0, 0, 1}) * s).precision() == 2);
    CHECK(p.coefficient(1) == 0);
}
