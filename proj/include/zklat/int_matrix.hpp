#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zklat {

/// Dense row-major integer matrix. Entries in this project stay small
/// (bounded by a modulus or a scaled Gram entry), so int64 storage with
/// explicit GMP fallbacks for determinants and inverses is enough.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n, std::int64_t scale = 1);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<std::int64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const std::int64_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const std::int64_t> r);
    void swap_rows(std::size_t a, std::size_t b);

    IntMatrix transpose() const;
    /// this · this^T
    IntMatrix gram() const;
    IntMatrix operator*(const IntMatrix& rhs) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Exact determinant of a square matrix by fraction-free elimination.
mpz_class determinant(const IntMatrix& a);

/// Canonical Hermite normal form (upper triangular, positive pivots, entries
/// above each pivot reduced into [0, pivot)) of the lattice spanned by the
/// rows of `generators` together with modulus·Z^n.
IntMatrix modular_hnf(const IntMatrix& generators, std::int64_t modulus);

/// Membership of v in the row lattice of an upper-triangular HNF basis.
bool hnf_contains(const IntMatrix& hnf, std::span<const std::int64_t> v);

/// Rows of modulus · (H^{-1})^T for a full-rank HNF H whose lattice contains
/// modulus·Z^n. These generate the lattice {x ∈ Z^n : x·h ≡ 0 (mod modulus) for all h}.
IntMatrix scaled_dual_rows(const IntMatrix& hnf, std::int64_t modulus);

struct ExtendedGcd {
    std::int64_t g, s, t;  // g = s·a + t·b, g ≥ 0
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace zklat
