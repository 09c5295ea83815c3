#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zklat/code.hpp"
#include "zklat/int_matrix.hpp"

namespace zklat {

/// A full-rank lattice Λ ⊂ R^n stored as integer rows of √scale · Λ.
/// `gram()` is scale × the true Gram matrix. `modulus()` is a positive N with
/// N·Z^n contained in the stored coordinate lattice; it drives the Hermite
/// normal form used for canonical comparison and membership.
class LatticeBasis {
public:
    LatticeBasis(std::int64_t scale, IntMatrix rows, std::int64_t modulus);

    std::int64_t scale() const noexcept { return scale_; }
    std::size_t dimension() const noexcept { return rows_.rows(); }
    const IntMatrix& rows() const noexcept { return rows_; }
    const IntMatrix& gram() const noexcept { return gram_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    /// Canonical basis of the same lattice.
    const IntMatrix& hnf() const noexcept { return hnf_; }
    LatticeBasis canonical() const;
    bool contains(std::span<const std::int64_t> stored_vector) const;

    /// Same lattice, coordinates multiplied by `factor` and scale by factor².
    LatticeBasis rescaled(std::int64_t factor) const;
    /// Inverse of rescaled() when every coordinate is divisible by `factor`.
    LatticeBasis try_unscale(std::int64_t factor) const;

private:
    std::int64_t scale_;
    IntMatrix rows_;
    IntMatrix gram_;
    std::int64_t modulus_;
    IntMatrix hnf_;
};

/// Equal as point sets (same scale and identical Hermite forms).
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);
/// True Gram matrices agree exactly: a.gram/a.scale == b.gram/b.scale.
bool same_gram(const LatticeBasis& a, const LatticeBasis& b);

struct LatticeInvariants {
    mpq_class determinant;  // of the true Gram matrix
    bool integral = false;
    bool unimodular = false;
    bool even = false;
    bool odd = false;  // integral with a vector of odd norm
};
LatticeInvariants lattice_invariants(const LatticeBasis& lattice);

/// (1/√m){ρ(C) + mZ^n} with no requirement on C.
LatticeBasis construction_a_lattice(const LinearCode& code);
/// Construction A of a self-dual code; DomainError otherwise.
LatticeBasis construction_a(const LinearCode& code);

/// Z^n stored with rows root·e_i (scale root²).
LatticeBasis standard_lattice(std::size_t n, std::int64_t root = 1);

struct EvenSublattice {
    LatticeBasis lattice;
    bool input_was_even = false;
};
/// {x ∈ L : ⟨x,x⟩ even}. The input must be integral.
EvenSublattice even_sublattice(const LatticeBasis& lattice);

/// Dual lattice, returned at scale·t² for the smallest t making coordinates integral.
LatticeBasis dual_lattice(const LatticeBasis& lattice);

/// The even unimodular lattices sharing the index-2 even sublattice with an
/// odd unimodular L of dimension divisible by 8. Cosets of L0*/L0 are visited
/// in the order generated by the rows of the Hermite basis of L0*.
std::vector<LatticeBasis> even_neighbors(const LatticeBasis& lattice);

/// Text format: "dimension <n>", "scale <s>", optional "modulus <N>", then n rows.
void write_lattice(std::ostream& out, const LatticeBasis& lattice);
LatticeBasis read_lattice(std::istream& in);

}  // namespace zklat
