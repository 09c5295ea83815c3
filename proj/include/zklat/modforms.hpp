#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "zklat/code.hpp"
#include "zklat/qseries.hpp"

namespace zklat {

/// Class sum Σ_{x ≡ j (mod m)} q^{x²/m}, exact through q^precision.
/// j = 0 and j = m/2 are closed under negation; other classes are a single
/// residue, which is all the symmetrized enumerator needs since the classes
/// of j and -j give the same series.
QSeries f_series(std::int64_t j, const Modulus& mod, std::int64_t precision);

/// swe_C(f_0, ..., f_floor(m/2)), exact through q^precision, returned with
/// the smallest exponent denominator.
QSeries theta_from_swe(const SWEPolynomial& w, std::int64_t precision);

/// 1 + 240 Σ σ_3(m) q^{2m}.
QSeries e4(std::int64_t precision);
/// q² Π (1 - q^{2m})^24.
QSeries delta24(std::int64_t precision);

/// E4^{j-3s} Δ^s (negative powers of E4 through the series reciprocal).
QSeries e4_delta_monomial(std::int64_t j, std::int64_t s, std::int64_t precision);

struct DecompositionResult {
    std::int64_t j = 0;
    std::vector<mpz_class> coefficients;  // a_0 .. a_mu
    QSeries remainder{1, 0};              // O(q^{2(mu+1)})

    /// Σ a_s E4^{j-3s} Δ^s + remainder at the remainder's precision.
    QSeries reconstruct() const;
};

/// Writes theta = Σ_{s≤mu} a_s E4^{j-3s} Δ^s + O(q^{2(mu+1)}) by solving the
/// unit-triangular system on the coefficients of q^0, q^2, ..., q^{2mu}.
/// Since every pivot is 1 the a_s are integers for integral input.
DecompositionResult decompose_e4_delta(const QSeries& theta, std::int64_t j, std::int64_t mu);

/// -b_{2(mu+1)} for θ_0 = f_0^n over Z_2k; positive exactly when a codeword of
/// Euclidean weight 4k(⌊n/24⌋+1) is forced. `precision` defaults to 2mu+4.
mpz_class extremal_defect(std::int64_t n, std::int64_t k, std::optional<std::int64_t> precision = std::nullopt);

/// The combination of E4^{j-3s}Δ^s equal to 1 + O(q^{2⌊n/24⌋+2}).
QSeries extremal_theta(std::int64_t n, std::int64_t precision);

}  // namespace zklat
