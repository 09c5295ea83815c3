#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zklat/int_matrix.hpp"
#include "zklat/ring.hpp"

namespace zklat {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// A submodule of Z_m^n given by generators. The Howell form is computed at
/// construction through the Hermite form of the lattice lift(C) + mZ^n, so a
/// constructed code is immutable and safe to share across threads.
class LinearCode {
public:
    LinearCode(Modulus mod, std::size_t length, std::vector<ResidueVector> generators);

    static LinearCode zero(Modulus mod, std::size_t length);
    static LinearCode full(Modulus mod, std::size_t length);
    static LinearCode from_rows(Modulus mod, const std::vector<std::vector<std::int64_t>>& rows);

    const Modulus& modulus() const noexcept { return mod_; }
    std::size_t length() const noexcept { return length_; }
    const std::vector<ResidueVector>& generators() const noexcept { return generators_; }

    /// Canonical generating set: echelon rows with distinct leading columns,
    /// leading entries dividing m. Equal codes have identical Howell forms.
    const std::vector<ResidueVector>& howell_form() const noexcept { return howell_; }
    /// Upper-triangular HNF basis of lift(C) + mZ^n.
    const IntMatrix& lattice_hnf() const noexcept { return hnf_; }

    mpz_class cardinality() const;
    bool contains(const ResidueVector& v) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.mod_ == b.mod_ && a.length_ == b.length_ && a.hnf_ == b.hnf_;
    }

private:
    Modulus mod_;
    std::size_t length_;
    std::vector<ResidueVector> generators_;
    IntMatrix hnf_;
    std::vector<ResidueVector> howell_;
};

LinearCode dual(const LinearCode& code);
bool is_self_orthogonal(const LinearCode& code);
bool is_self_dual(const LinearCode& code);

/// Weight test on a generating set only. Sound for self-orthogonal codes over
/// Z_2k because wt(x+y) ≡ wt(x)+wt(y)+2⟨x,y⟩ and wt(ax) ≡ a²wt(x) (mod 4k).
bool type_ii_by_generators(const LinearCode& code);
/// Direct definition over every codeword; ResourceError above `cap`.
bool type_ii_by_enumeration(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);
/// Self-dual, even modulus, all Euclidean weights ≡ 0 (mod 4k). When the
/// code is enumerable both routes run and must agree (std::logic_error otherwise).
bool is_type_ii(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Visits each codeword exactly once (mixed-radix walk over the Howell rows).
void for_each_codeword(const LinearCode& code, std::uint64_t cap,
                       const std::function<void(const ResidueVector&)>& visit);
std::vector<ResidueVector> enumerate_codewords(const LinearCode& code,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// Symmetrized weight enumerator. Exponent tuple entry j counts components
/// equal to ±j (j = 0..floor(m/2)).
class SWEPolynomial {
public:
    using Exponents = std::vector<int>;

    SWEPolynomial(Modulus mod, std::size_t length);

    const Modulus& modulus() const noexcept { return mod_; }
    std::size_t length() const noexcept { return length_; }
    std::size_t variables() const noexcept { return static_cast<std::size_t>(mod_.half()) + 1; }

    void add(const Exponents& e, const mpz_class& c);
    mpz_class coefficient(const Exponents& e) const;
    mpz_class total() const;
    const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }

    std::string to_string() const;

private:
    Modulus mod_;
    std::size_t length_;
    std::map<Exponents, mpz_class> terms_;
};

SWEPolynomial::Exponents composition(const ResidueVector& v);
SWEPolynomial swe(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

std::int64_t min_euclidean_weight_bruteforce(const LinearCode& code,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// 4k⌊n/24⌋ + 4k.
std::int64_t extremal_bound(std::size_t length, const Modulus& mod);

/// Exact d_E, or a certified lower bound on it.
struct WeightCertificate {
    std::int64_t value = 0;
    bool exact = false;
};

enum class Extremality { extremal, not_extremal, unresolved };
std::string to_string(Extremality e);

/// d_E equals the bound. DomainError unless the modulus is 2k with k ≤ 6.
bool is_extremal(const LinearCode& code, std::int64_t min_weight);
/// A lower bound that reaches the bound also settles extremality, since no
/// Type II code with k ≤ 6 exceeds it.
Extremality classify_extremality(const LinearCode& code, const WeightCertificate& cert);

}  // namespace zklat
