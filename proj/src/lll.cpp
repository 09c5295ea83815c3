#include "zklat/enumerate.hpp"

#include <cmath>
#include <vector>

#include "zklat/errors.hpp"

namespace zklat {

namespace {

// b_k ← b_k − q·b_j on basis, transform and Gram (kept exact).
void row_subtract(IntMatrix& basis, IntMatrix& transform, IntMatrix& gram, std::size_t k, std::size_t j,
                  std::int64_t q) {
    const auto n = gram.rows();
    for (std::size_t c = 0; c < basis.cols(); ++c) basis(k, c) -= q * basis(j, c);
    for (std::size_t c = 0; c < transform.cols(); ++c) transform(k, c) -= q * transform(j, c);
    const auto gkk = gram(k, k) - 2 * q * gram(k, j) + q * q * gram(j, j);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        gram(k, i) -= q * gram(j, i);
        gram(i, k) = gram(k, i);
    }
    gram(k, k) = gkk;
}

void swap_rows(IntMatrix& basis, IntMatrix& transform, IntMatrix& gram, std::size_t a, std::size_t b) {
    basis.swap_rows(a, b);
    transform.swap_rows(a, b);
    gram.swap_rows(a, b);
    const auto n = gram.rows();
    for (std::size_t i = 0; i < n; ++i) std::swap(gram(i, a), gram(i, b));
}

}  // namespace

LllResult lll_reduce(const LatticeBasis& lattice, double delta) {
    if (!(delta > 0.25 && delta < 1.0)) throw InputError("LLL delta must lie in (1/4, 1)");
    const auto n = lattice.dimension();
    IntMatrix basis = lattice.rows();
    IntMatrix transform = IntMatrix::identity(n);
    IntMatrix gram = lattice.gram();

    using real = long double;
    std::vector<real> r(n * n, 0), mu(n * n, 0);
    auto R = [&](std::size_t i, std::size_t j) -> real& { return r[i * n + j]; };
    auto MU = [&](std::size_t i, std::size_t j) -> real& { return mu[i * n + j]; };

    // Row k of the Cholesky-style data from the exact Gram matrix.
    auto orthogonalize = [&](std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            real acc = static_cast<real>(gram(k, j));
            for (std::size_t i = 0; i < j; ++i) acc -= MU(j, i) * R(k, i);
            R(k, j) = acc;
            if (j < k) MU(k, j) = acc / R(j, j);
        }
    };

    if (n == 0) return {lattice, transform};
    orthogonalize(0);
    std::size_t k = 1;
    std::uint64_t guard = 0;
    while (k < n) {
        if (++guard > 100000000ULL) throw std::runtime_error("LLL failed to converge");
        // Size reduction, repeated while rounding leaves large coefficients.
        for (bool again = true; again;) {
            again = false;
            orthogonalize(k);
            for (std::size_t jj = k; jj-- > 0;) {
                const real m = MU(k, jj);
                if (std::fabs(m) <= 0.5L) continue;
                const auto q = static_cast<std::int64_t>(std::llround(m));
                if (std::fabs(m) > 1e6L) again = true;
                row_subtract(basis, transform, gram, k, jj, q);
                for (std::size_t i = 0; i < jj; ++i) MU(k, i) -= static_cast<real>(q) * MU(jj, i);
                MU(k, jj) -= static_cast<real>(q);
            }
        }
        orthogonalize(k);
        const real lhs = static_cast<real>(delta) * R(k - 1, k - 1);
        const real rhs = R(k, k) + MU(k, k - 1) * MU(k, k - 1) * R(k - 1, k - 1);
        if (lhs > rhs) {
            swap_rows(basis, transform, gram, k, k - 1);
            if (k - 1 == 0) orthogonalize(0);
            k = (k > 1) ? k - 1 : 1;
            if (k == 1) orthogonalize(0);
        } else {
            ++k;
        }
    }
    return {LatticeBasis(lattice.scale(), std::move(basis), lattice.modulus()), std::move(transform)};
}

}  // namespace zklat
