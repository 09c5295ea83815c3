#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace zklat {

/// Truncated formal series Σ c_p q^{p/D} with p ≥ 0. Coefficients are exact
/// for numerators 0..precision(); nothing is stored beyond that.
class QSeries {
public:
    QSeries(std::int64_t denominator, std::int64_t precision);

    static QSeries constant(std::int64_t denominator, std::int64_t precision, const mpz_class& c);
    static QSeries from_coefficients(std::int64_t denominator, std::vector<mpz_class> coefficients);

    std::int64_t denominator() const noexcept { return denominator_; }
    /// Largest exact exponent numerator.
    std::int64_t precision() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Exponents up to precision()/denominator() are exact.
    mpq_class precision_exponent() const;

    const mpz_class& coefficient(std::int64_t numerator) const;
    /// Coefficient of q^{p/d}; zero when p/d is not on this series' grid.
    mpz_class at(std::int64_t p, std::int64_t d = 1) const;
    void set(std::int64_t numerator, const mpz_class& c);
    void add(std::int64_t numerator, const mpz_class& c);

    /// Lowest numerator with a nonzero coefficient (nullopt for the zero series).
    std::optional<std::int64_t> valuation() const;
    bool is_zero() const;

    QSeries with_denominator(std::int64_t new_denominator) const;
    /// Smallest denominator that still represents every nonzero exponent.
    QSeries reduced() const;
    QSeries truncated(std::int64_t precision) const;

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const mpz_class& c);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const mpz_class& c) { return a *= c; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    QSeries pow(std::int64_t e) const;
    /// 1/f for a series with constant term ±1.
    QSeries reciprocal() const;

    /// Equal coefficients on the common exact range (after matching denominators).
    bool agrees_with(const QSeries& other) const;

    /// Terms "c·q^(p/D)" in ascending order with a trailing O(·).
    std::string to_string() const;
    nlohmann::json to_json() const;
    static QSeries from_json(const nlohmann::json& j);

private:
    std::int64_t denominator_;
    std::vector<mpz_class> coeffs_;
};

}  // namespace zklat
