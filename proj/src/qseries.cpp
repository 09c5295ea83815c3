#include "zklat/qseries.hpp"

#include <numeric>
#include <sstream>

#include "zklat/errors.hpp"

namespace zklat {

namespace {

const mpz_class kZero = 0;

}  // namespace

QSeries::QSeries(std::int64_t denominator, std::int64_t precision)
    : denominator_(denominator), coeffs_(static_cast<std::size_t>(precision + 1)) {
    if (denominator <= 0) throw InputError("series denominator must be positive");
    if (precision < 0) throw InputError("series precision must be nonnegative");
}

QSeries QSeries::constant(std::int64_t denominator, std::int64_t precision, const mpz_class& c) {
    QSeries s(denominator, precision);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::from_coefficients(std::int64_t denominator, std::vector<mpz_class> coefficients) {
    if (coefficients.empty()) throw InputError("series needs at least one coefficient");
    QSeries s(denominator, 0);
    s.coeffs_ = std::move(coefficients);
    return s;
}

mpq_class QSeries::precision_exponent() const {
    mpq_class q(precision(), denominator_);
    q.canonicalize();
    return q;
}

const mpz_class& QSeries::coefficient(std::int64_t numerator) const {
    if (numerator < 0 || numerator > precision()) {
        if (numerator > precision())
            throw ResourceError("coefficient q^(" + std::to_string(numerator) + "/" + std::to_string(denominator_) +
                                ") lies beyond the series precision");
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(numerator)];
}

mpz_class QSeries::at(std::int64_t p, std::int64_t d) const {
    // p/d = num/D  ⇔  num = p·D/d
    const auto scaled = p * denominator_;
    if (scaled % d != 0) return 0;
    return coefficient(scaled / d);
}

void QSeries::set(std::int64_t numerator, const mpz_class& c) {
    if (numerator < 0 || numerator > precision()) throw InputError("set outside the series range");
    coeffs_[static_cast<std::size_t>(numerator)] = c;
}

void QSeries::add(std::int64_t numerator, const mpz_class& c) {
    if (numerator < 0 || numerator > precision()) return;
    coeffs_[static_cast<std::size_t>(numerator)] += c;
}

std::optional<std::int64_t> QSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<std::int64_t>(i);
    return std::nullopt;
}

bool QSeries::is_zero() const { return !valuation().has_value(); }

QSeries QSeries::with_denominator(std::int64_t new_denominator) const {
    if (new_denominator % denominator_ != 0)
        throw InputError("new denominator must be a multiple of the current one");
    const auto f = new_denominator / denominator_;
    QSeries out(new_denominator, precision() * f);
    for (std::int64_t p = 0; p <= precision(); ++p) out.coeffs_[static_cast<std::size_t>(p * f)] = coeffs_[p];
    return out;
}

QSeries QSeries::reduced() const {
    std::int64_t g = denominator_;
    for (std::size_t i = 0; i < coeffs_.size() && g > 1; ++i)
        if (coeffs_[i] != 0) g = std::gcd(g, static_cast<std::int64_t>(i));
    // Keep the exact range aligned to the coarser grid.
    const auto new_precision = precision() / g;
    QSeries out(denominator_ / g, new_precision);
    for (std::int64_t p = 0; p <= new_precision; ++p) out.coeffs_[p] = coeffs_[p * g];
    return out;
}

QSeries QSeries::truncated(std::int64_t new_precision) const {
    if (new_precision > precision()) throw ResourceError("cannot truncate to a higher precision");
    QSeries out(denominator_, new_precision);
    for (std::int64_t p = 0; p <= new_precision; ++p) out.coeffs_[p] = coeffs_[p];
    return out;
}

QSeries& QSeries::operator+=(const QSeries& other) {
    if (other.denominator_ != denominator_) throw InputError("series denominators differ");
    if (other.precision() < precision()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
    if (other.denominator_ != denominator_) throw InputError("series denominators differ");
    if (other.precision() < precision()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.denominator_ != b.denominator_) throw InputError("series denominators differ");
    // Valuations extend the exact range: (q^va·…)(q^vb·…) is exact to min(Pa+vb, Pb+va).
    const auto va = a.valuation().value_or(a.precision() + 1);
    const auto vb = b.valuation().value_or(b.precision() + 1);
    const auto prec = std::min(a.precision() + vb, b.precision() + va);
    QSeries out(a.denominator_, prec);
    for (std::int64_t i = va; i <= std::min(a.precision(), prec); ++i) {
        const auto& ai = a.coeffs_[i];
        if (ai == 0) continue;
        const auto jmax = std::min(b.precision(), prec - i);
        for (std::int64_t j = vb; j <= jmax; ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

QSeries QSeries::pow(std::int64_t e) const {
    if (e < 0) return reciprocal().pow(-e);
    QSeries result = constant(denominator_, precision(), 1);
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

QSeries QSeries::reciprocal() const {
    const auto& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) throw DomainError("series reciprocal needs constant term ±1");
    QSeries inv(denominator_, precision());
    inv.coeffs_[0] = c0;  // 1/±1 = ±1
    for (std::int64_t p = 1; p <= precision(); ++p) {
        mpz_class acc = 0;
        for (std::int64_t i = 1; i <= p; ++i)
            if (coeffs_[i] != 0) acc += coeffs_[i] * inv.coeffs_[p - i];
        inv.coeffs_[p] = -acc * c0;
    }
    return inv;
}

bool QSeries::agrees_with(const QSeries& other) const {
    const auto d = std::lcm(denominator_, other.denominator_);
    const auto a = with_denominator(d);
    const auto b = other.with_denominator(d);
    const auto p = std::min(a.precision(), b.precision());
    for (std::int64_t i = 0; i <= p; ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

namespace {

std::string exponent_string(std::int64_t p, std::int64_t d) {
    const auto g = std::gcd(p, d);
    const auto num = p / g, den = d / g;
    if (den == 1) return std::to_string(num);
    return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::int64_t p = 0; p <= precision(); ++p) {
        const auto& c = coeffs_[p];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (p == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "·";
            os << "q";
            if (p != denominator_) os << "^" << exponent_string(p, denominator_);
        }
    }
    if (first) os << "0";
    os << " + O(q^" << exponent_string(precision() + 1, denominator_) << ")";
    return os.str();
}

nlohmann::json QSeries::to_json() const {
    nlohmann::json j;
    j["denominator"] = denominator_;
    j["precision"] = precision();
    auto terms = nlohmann::json::array();
    for (std::int64_t p = 0; p <= precision(); ++p)
        if (coeffs_[p] != 0) terms.push_back(nlohmann::json::array({p, coeffs_[p].get_str()}));
    j["terms"] = std::move(terms);
    return j;
}

QSeries QSeries::from_json(const nlohmann::json& j) {
    QSeries s(j.at("denominator").get<std::int64_t>(), j.at("precision").get<std::int64_t>());
    for (const auto& t : j.at("terms")) s.set(t.at(0).get<std::int64_t>(), mpz_class(t.at(1).get<std::string>()));
    return s;
}

}  // namespace zklat
