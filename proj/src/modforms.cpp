#include "zklat/modforms.hpp"

#include <cmath>
#include <map>

#include "zklat/errors.hpp"

namespace zklat {

QSeries f_series(std::int64_t j, const Modulus& mod, std::int64_t precision) {
    const auto m = mod.value();
    if (j < 0 || j > mod.half()) throw InputError("class index j must lie in [0, floor(m/2)]");
    if (precision < 0) throw InputError("precision must be nonnegative");
    // Exponent x²/m is stored with denominator m as numerator x².
    QSeries f(m, precision * m);
    const auto limit = precision * m;
    const bool symmetric = (j == 0) || (2 * j == m);
    const auto xmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    for (std::int64_t x = -xmax; x <= xmax; ++x) {
        const auto sq = x * x;
        if (sq > limit) continue;
        const auto r = ((x % m) + m) % m;
        if (r == j || (symmetric && r == (m - j) % m)) f.add(sq, 1);
    }
    return f;
}

QSeries theta_from_swe(const SWEPolynomial& w, std::int64_t precision) {
    const auto& mod = w.modulus();
    const auto vars = static_cast<std::int64_t>(w.variables());
    std::vector<QSeries> f;
    for (std::int64_t j = 0; j < vars; ++j) f.push_back(f_series(j, mod, precision));
    std::vector<std::map<int, QSeries>> powers(static_cast<std::size_t>(vars));
    auto power = [&](std::size_t j, int e) -> const QSeries& {
        auto it = powers[j].find(e);
        if (it == powers[j].end()) it = powers[j].emplace(e, f[j].pow(e)).first;
        return it->second;
    };

    QSeries theta(mod.value(), precision * mod.value());
    for (const auto& [exps, coeff] : w.terms()) {
        QSeries term = QSeries::constant(mod.value(), precision * mod.value(), coeff);
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (exps[j] != 0) term = term * power(j, exps[j]);
        theta += term.truncated(precision * mod.value());
    }
    return theta.reduced();
}

QSeries e4(std::int64_t precision) {
    QSeries e(1, precision);
    e.set(0, 1);
    for (std::int64_t m = 1; 2 * m <= precision; ++m) {
        mpz_class sigma = 0;
        for (std::int64_t d = 1; d <= m; ++d)
            if (m % d == 0) sigma += mpz_class(d) * d * d;
        e.set(2 * m, 240 * sigma);
    }
    return e;
}

QSeries delta24(std::int64_t precision) {
    QSeries prod = QSeries::constant(1, precision, 1);
    for (std::int64_t m = 1; 2 * m <= precision; ++m) {
        QSeries factor = QSeries::constant(1, precision, 1);
        factor.set(2 * m, -1);
        prod = (prod * factor.pow(24)).truncated(precision);
    }
    QSeries q2(1, precision);
    if (precision >= 2) q2.set(2, 1);
    return (q2 * prod).truncated(precision);
}

QSeries e4_delta_monomial(std::int64_t j, std::int64_t s, std::int64_t precision) {
    const auto e = e4(precision);
    const auto d = delta24(precision);
    QSeries out = e.pow(j - 3 * s) * d.pow(s);
    return out.truncated(precision);
}

QSeries DecompositionResult::reconstruct() const {
    const auto precision = remainder.precision();
    QSeries sum = remainder;
    for (std::size_t s = 0; s < coefficients.size(); ++s) {
        if (coefficients[s] == 0) continue;
        sum += e4_delta_monomial(j, static_cast<std::int64_t>(s), precision) * coefficients[s];
    }
    return sum;
}

DecompositionResult decompose_e4_delta(const QSeries& theta, std::int64_t j, std::int64_t mu) {
    if (j < 1) throw InputError("weight index j = n/8 must be positive");
    if (mu < 0) throw InputError("mu must be nonnegative");
    const auto reduced = theta.reduced();
    if (reduced.denominator() != 1) throw DomainError("theta series must have integral exponents");
    const auto precision = reduced.precision();
    if (precision < 2 * (mu + 1)) {
        throw ResourceError("decomposition through mu = " + std::to_string(mu) + " needs precision q^" +
                            std::to_string(2 * (mu + 1)) + ", have q^" + std::to_string(precision));
    }
    if (reduced.coefficient(0) != 1) throw DomainError("theta series must have constant term 1");
    for (std::int64_t p = 1; p < 2 * (mu + 1); p += 2)
        if (reduced.coefficient(p) != 0) throw DomainError("odd exponent below q^(2(mu+1)) cannot be matched by E4, Δ");

    DecompositionResult result{j, {}, reduced};
    for (std::int64_t s = 0; s <= mu; ++s) {
        const auto basis = e4_delta_monomial(j, s, precision);
        const mpz_class a = result.remainder.coefficient(2 * s);  // basis has leading term q^{2s}
        result.coefficients.push_back(a);
        if (a != 0) result.remainder -= basis * a;
    }
    return result;
}

mpz_class extremal_defect(std::int64_t n, std::int64_t k, std::optional<std::int64_t> precision) {
    if (n <= 0 || n % 8 != 0) throw DomainError("extremal defect is defined for lengths divisible by 8");
    const auto mod = Modulus::from_k(k);
    const auto j = n / 8;
    const auto mu = n / 24;
    const auto prec = precision.value_or(2 * mu + 4);
    const auto theta0 = f_series(0, mod, prec).pow(n).truncated(prec * mod.value());
    const auto d = decompose_e4_delta(theta0, j, mu + 1);
    return -d.coefficients.back();
}

QSeries extremal_theta(std::int64_t n, std::int64_t precision) {
    if (n <= 0 || n % 8 != 0) throw DomainError("extremal theta series exist for dimensions divisible by 8");
    const auto j = n / 8;
    const auto mu = n / 24;
    const auto d = decompose_e4_delta(QSeries::constant(1, std::max(precision, 2 * (mu + 1)), 1), j, mu);
    QSeries out(1, d.remainder.precision());
    for (std::size_t s = 0; s < d.coefficients.size(); ++s)
        out += e4_delta_monomial(j, static_cast<std::int64_t>(s), out.precision()) * d.coefficients[s];
    return out.truncated(precision);
}

}  // namespace zklat
