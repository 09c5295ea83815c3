#include "zklat/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "zklat/errors.hpp"

namespace zklat {

IntMatrix IntMatrix::identity(std::size_t n, std::int64_t scale) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
    IntMatrix m(0, cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw InputError("ragged matrix rows");
        m.append_row(r);
    }
    return m;
}

void IntMatrix::append_row(std::span<const std::int64_t> r) {
    if (r.size() != cols_) throw InputError("row length does not match matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::gram() const {
    IntMatrix g(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < rows_; ++j) g(i, j) = g(j, i) = dot(row(i), row(j));
    return g;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
        }
    return p;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << '\n';
    }
    return os.str();
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

mpz_class determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    const auto n = a.rows();
    if (n == 0) return 1;
    std::vector<mpz_class> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const auto q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
        std::tie(old_t, t) = std::pair{t, old_t - q * t};
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    auto r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
    auto q = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
    return q;
}

}  // namespace

IntMatrix modular_hnf(const IntMatrix& generators, std::int64_t modulus) {
    if (modulus <= 0) throw InputError("HNF modulus must be positive");
    const auto n = generators.cols();
    IntMatrix w = IntMatrix::identity(n, modulus);
    std::vector<std::int64_t> v(n), combined(n);

    for (std::size_t g = 0; g < generators.rows(); ++g) {
        for (std::size_t j = 0; j < n; ++j) v[j] = floor_mod(generators(g, j), modulus);
        for (std::size_t c = 0; c < n; ++c) {
            if (v[c] == 0) continue;
            auto pivot = w.row(c);
            const auto a = pivot[c];
            const auto b = v[c];
            const auto [gcd, s, t] = extended_gcd(a, b);
            const auto ag = a / gcd, bg = b / gcd;
            for (std::size_t j = c; j < n; ++j) {
                combined[j] = s * pivot[j] + t * v[j];
                v[j] = ag * v[j] - bg * pivot[j];
            }
            pivot[c] = gcd;
            for (std::size_t j = c + 1; j < n; ++j) {
                pivot[j] = floor_mod(combined[j], modulus);
                v[j] = floor_mod(v[j], modulus);
            }
            v[c] = 0;
        }
    }

    // Canonical reduction of the entries above each pivot.
    for (std::size_t c = 0; c < n; ++c) {
        const auto p = w(c, c);
        for (std::size_t r = 0; r < c; ++r) {
            const auto q = floor_div(w(r, c), p);
            if (q == 0) continue;
            for (std::size_t j = c; j < n; ++j) w(r, j) -= q * w(c, j);
            for (std::size_t j = c + 1; j < n; ++j) w(r, j) = floor_mod(w(r, j), modulus);
        }
    }
    return w;
}

bool hnf_contains(const IntMatrix& hnf, std::span<const std::int64_t> v) {
    const auto n = hnf.cols();
    if (v.size() != n) throw InputError("membership test with wrong vector length");
    std::vector<std::int64_t> r(v.begin(), v.end());
    for (std::size_t c = 0; c < n; ++c) {
        if (r[c] == 0) continue;
        const auto p = hnf(c, c);
        if (r[c] % p != 0) return false;
        const auto q = r[c] / p;
        for (std::size_t j = c; j < n; ++j) r[j] -= q * hnf(c, j);
    }
    return true;
}

IntMatrix scaled_dual_rows(const IntMatrix& hnf, std::int64_t modulus) {
    // Solve X·H = modulus·I row by row; H is upper triangular so each row is a
    // forward substitution over the columns. X is integral because modulus·Z^n
    // lies in the row lattice of H. The dual generators are the columns of X.
    const auto n = hnf.rows();
    std::vector<mpz_class> x(n);
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            mpz_class acc = (c == i) ? mpz_class(modulus) : mpz_class(0);
            for (std::size_t r = 0; r < c; ++r)
                if (hnf(r, c) != 0) acc -= x[r] * hnf(r, c);
            const mpz_class p = hnf(c, c);
            if (!mpz_divisible_p(acc.get_mpz_t(), p.get_mpz_t()))
                throw DomainError("lattice does not contain modulus·Z^n");
            mpz_divexact(x[c].get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
        }
        for (std::size_t c = 0; c < n; ++c) {
            mpz_class r = x[c] % modulus;
            if (r < 0) r += modulus;
            out(c, i) = r.get_si();
        }
    }
    return out;
}

}  // namespace zklat
