#include "zklat/lattice.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "zklat/errors.hpp"

namespace zklat {

LatticeBasis::LatticeBasis(std::int64_t scale, IntMatrix rows, std::int64_t modulus)
    : scale_(scale), rows_(std::move(rows)), modulus_(modulus) {
    if (scale_ <= 0) throw InputError("lattice scale must be positive");
    if (rows_.rows() != rows_.cols()) throw InputError("lattice basis must be square");
    gram_ = rows_.gram();
    hnf_ = modular_hnf(rows_, modulus_);
    mpz_class hnf_det = 1;
    for (std::size_t i = 0; i < hnf_.rows(); ++i) hnf_det *= hnf_(i, i);
    mpz_class det = abs(determinant(rows_));
    if (det == 0) throw InputError("lattice basis is singular");
    if (det != hnf_det) throw InputError("modulus·Z^n is not contained in the lattice");
}

LatticeBasis LatticeBasis::canonical() const { return LatticeBasis(scale_, hnf_, modulus_); }

bool LatticeBasis::contains(std::span<const std::int64_t> stored_vector) const {
    return hnf_contains(hnf_, stored_vector);
}

LatticeBasis LatticeBasis::rescaled(std::int64_t factor) const {
    if (factor <= 0) throw InputError("rescale factor must be positive");
    IntMatrix r = rows_;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (auto& x : r.row(i)) x *= factor;
    return LatticeBasis(scale_ * factor * factor, std::move(r), modulus_ * factor);
}

LatticeBasis LatticeBasis::try_unscale(std::int64_t factor) const {
    if (factor <= 1 || scale_ % (factor * factor) != 0 || modulus_ % factor != 0) return *this;
    IntMatrix r = hnf_;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (auto& x : r.row(i)) {
            if (x % factor != 0) return *this;
            x /= factor;
        }
    return LatticeBasis(scale_ / (factor * factor), std::move(r), modulus_ / factor);
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
    return a.scale() == b.scale() && a.dimension() == b.dimension() && a.hnf() == b.hnf();
}

bool same_gram(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.dimension() != b.dimension()) return false;
    const auto n = a.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // a.gram/a.scale == b.gram/b.scale, cross-multiplied in GMP.
            if (mpz_class(a.gram()(i, j)) * b.scale() != mpz_class(b.gram()(i, j)) * a.scale()) return false;
        }
    return true;
}

LatticeInvariants lattice_invariants(const LatticeBasis& lattice) {
    LatticeInvariants inv;
    const auto n = lattice.dimension();
    const auto s = lattice.scale();
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(s), n);
    inv.determinant = mpq_class(determinant(lattice.gram()), denom);
    inv.determinant.canonicalize();

    inv.integral = true;
    bool all_even = true;
    for (std::size_t i = 0; i < n && inv.integral; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (lattice.gram()(i, j) % s != 0) {
                inv.integral = false;
                break;
            }
            if (i == j && (lattice.gram()(i, i) / s) % 2 != 0) all_even = false;
        }
    inv.unimodular = inv.integral && inv.determinant == 1;
    inv.even = inv.integral && all_even;
    inv.odd = inv.integral && !all_even;
    return inv;
}

LatticeBasis construction_a_lattice(const LinearCode& code) {
    const auto m = code.modulus().value();
    return LatticeBasis(m, code.lattice_hnf(), m);
}

LatticeBasis construction_a(const LinearCode& code) {
    if (!is_self_dual(code)) throw DomainError("Construction A needs a self-dual code");
    return construction_a_lattice(code);
}

LatticeBasis standard_lattice(std::size_t n, std::int64_t root) {
    if (root <= 0) throw InputError("standard lattice root must be positive");
    return LatticeBasis(root * root, IntMatrix::identity(n, root), root);
}

EvenSublattice even_sublattice(const LatticeBasis& lattice) {
    const auto n = lattice.dimension();
    const auto s = lattice.scale();
    const auto& g = lattice.gram();
    std::vector<bool> odd(n);
    std::ptrdiff_t pivot = -1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j) % s != 0) throw DomainError("even sublattice needs an integral lattice");
        odd[i] = (g(i, i) / s) % 2 != 0;
        if (odd[i] && pivot < 0) pivot = static_cast<std::ptrdiff_t>(i);
    }
    if (pivot < 0) return {lattice, true};

    // Norm parity is additive on an integral lattice, so the kernel is spanned
    // by the even rows, odd rows shifted by the first odd row, and twice that row.
    const auto p = static_cast<std::size_t>(pivot);
    IntMatrix rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto x = lattice.rows()(i, j);
            if (i == p) {
                rows(i, j) = 2 * x;
            } else if (odd[i]) {
                rows(i, j) = x + lattice.rows()(p, j);
            } else {
                rows(i, j) = x;
            }
        }
    return {LatticeBasis(s, std::move(rows), 2 * lattice.modulus()).canonical(), false};
}

LatticeBasis dual_lattice(const LatticeBasis& lattice) {
    // Stored dual = scale · (row lattice)^#, and scaled_dual_rows gives N·(row lattice)^#.
    // Multiply coordinates by t = N / gcd(scale, N) so that t·scale/N is integral.
    const auto s = lattice.scale();
    const auto big_n = lattice.modulus();
    const auto t = big_n / std::gcd(s, big_n);
    const auto factor = t * s / big_n;
    IntMatrix rows = scaled_dual_rows(lattice.hnf(), big_n);
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (auto& x : rows.row(i)) x *= factor;
    // Integer rows span a sublattice of Z^n, so N·(rows)^# ⊇ N·Z^n.
    const auto dual_modulus = factor * big_n;
    return LatticeBasis(s * t * t, modular_hnf(rows, dual_modulus), dual_modulus);
}

void write_lattice(std::ostream& out, const LatticeBasis& lattice) {
    out << "dimension " << lattice.dimension() << '\n';
    out << "scale " << lattice.scale() << '\n';
    out << "modulus " << lattice.modulus() << '\n';
    out << lattice.rows().to_string();
}

LatticeBasis read_lattice(std::istream& in) {
    std::int64_t n = -1, scale = -1, modulus = 0;
    std::string line;
    IntMatrix rows;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "dimension") {
            ls >> n;
            rows = IntMatrix(0, static_cast<std::size_t>(n));
        } else if (word == "scale") {
            ls >> scale;
        } else if (word == "modulus") {
            ls >> modulus;
        } else {
            if (n < 0) throw InputError("lattice file: rows before the dimension header");
            std::vector<std::int64_t> r;
            std::istringstream rs(line);
            for (std::int64_t x; rs >> x;) r.push_back(x);
            if (!rs.eof()) throw InputError("lattice file: non-integer entry in row");
            rows.append_row(r);
        }
    }
    if (n < 0 || scale <= 0) throw InputError("lattice file: missing dimension or scale header");
    if (rows.rows() != static_cast<std::size_t>(n)) throw InputError("lattice file: wrong number of rows");
    if (modulus <= 0) {
        const mpz_class det = abs(determinant(rows));
        if (!det.fits_slong_p()) throw InputError("lattice file: give a modulus line for this basis");
        modulus = det.get_si();
    }
    return LatticeBasis(scale, std::move(rows), modulus);
}

}  // namespace zklat
