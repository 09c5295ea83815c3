#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "zklat/constructions.hpp"
#include "zklat/enumerate.hpp"
#include "zklat/errors.hpp"
#include "zklat/lattice.hpp"

using namespace zklat;

namespace {

// Count lattice vectors in a box by membership test; stored norms ≤ bound.
std::map<std::int64_t, std::uint64_t> box_count(const LatticeBasis& l, std::int64_t box, std::int64_t bound) {
    const auto n = l.dimension();
    std::map<std::int64_t, std::uint64_t> out;
    std::vector<std::int64_t> x(n, -box);
    while (true) {
        std::int64_t sq = 0;
        for (auto v : x) sq += v * v;
        if (sq <= bound && l.contains(x)) ++out[sq];
        std::size_t i = 0;
        while (i < n && ++x[i] > box) x[i++] = -box;
        if (i == n) return out;
    }
}

LatticeBasis random_code_lattice(testing::Gen& gen, std::size_t n) {
    const Modulus m(gen.uniform(2, 5));
    const auto c = gen.code(m, n, static_cast<std::size_t>(gen.uniform(1, 3)));
    return construction_a_lattice(c);
}

double gso_check(const LatticeBasis& l, double delta) {
    // Returns the worst violation of size reduction or the Lovász condition (≤ 0 when reduced).
    const auto n = l.dimension();
    const auto& g = l.gram();
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0));
    std::vector<double> b(n);
    double worst = -1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double s = static_cast<double>(g(i, j));
            for (std::size_t t = 0; t < j; ++t) s -= mu[i][t] * mu[j][t] * b[t];
            mu[i][j] = s / b[j];
            worst = std::max(worst, std::abs(mu[i][j]) - 0.5 - 1e-9);
        }
        double s = static_cast<double>(g(i, i));
        for (std::size_t t = 0; t < i; ++t) s -= mu[i][t] * mu[i][t] * b[t];
        b[i] = s;
        if (i > 0) worst = std::max(worst, (delta - mu[i][i - 1] * mu[i][i - 1]) * b[i - 1] - b[i] - 1e-6 * b[i - 1]);
    }
    return worst;
}

}  // namespace

TEST_CASE("LLL output is a reduced basis of the same lattice") {
    testing::Gen gen(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(2, 10));
        const auto l = random_code_lattice(gen, n);
        const auto skew = LatticeBasis(l.scale(), gen.unimodular(n, 30) * l.rows(), l.modulus());
        const auto r = lll_reduce(skew);
        CHECK(same_lattice(r.basis, skew));
        CHECK(r.basis.rows() == r.transform * skew.rows());
        const auto d = determinant(r.transform);
        CHECK((d == 1 || d == -1));
        CHECK(gso_check(r.basis, 0.99) <= 0);
    }
}

TEST_CASE("minimum of small lattices") {
    const auto z8 = min_norm(standard_lattice(8));
    CHECK(z8.value() == 1);
    CHECK(z8.kissing == 16);
    const auto r = min_norm(LatticeBasis(3, IntMatrix::identity(5, 3), 3));
    CHECK(r.value() == 3);
    CHECK(r.kissing == 10);
    const auto d8 = even_sublattice(standard_lattice(8)).lattice;
    CHECK(min_norm(d8).value() == 2);
    CHECK(min_norm(d8).kissing == 112);
    // D8* is not integral; its minimum 1 comes from ±e_i.
    const auto dual_min = min_norm(dual_lattice(d8));
    CHECK(dual_min.scale == 4);
    CHECK(dual_min.scaled_value == 4);
    CHECK(dual_min.kissing == 16);
}

TEST_CASE("budget, checkpoints and threads") {
    const auto e8 = construction_a(LinearCode::from_rows(Modulus(2), {{1, 1, 1, 1, 0, 0, 0, 0},
                                                                   {0, 0, 1, 1, 1, 1, 0, 0},
                                                                   {0, 0, 0, 0, 1, 1, 1, 1},
                                                                   {1, 0, 1, 0, 1, 0, 1, 0}}));
    REQUIRE(lattice_invariants(e8).unimodular);
    EnumerationOptions tight;
    tight.node_budget = 50;
    CHECK_THROWS_AS(shell_sizes(e8, 8, tight), ResourceError);

    EnumerationOptions chatty;
    chatty.checkpoint_nodes = 100;
    int calls = 0;
    chatty.checkpoint = [&](const EnumerationProgress& p) {
        ++calls;
        CHECK(p.subtrees_done <= p.subtrees_total);
    };
    const auto a = shell_sizes(e8, 8, chatty);
    CHECK(calls > 0);
    EnumerationOptions many;
    many.threads = 4;
    const auto b = shell_sizes(e8, 8, many);
    CHECK(a.counts() == b.counts());
    CHECK(a.count(2) == 240);
    CHECK(a.count(8) == 17520);
    CHECK_THROWS_AS(shell_sizes(e8, -1), InputError);
}

TEST_CASE("property: shell counts match box enumeration") {
    testing::Gen gen(62);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 4));
        const auto l = random_code_lattice(gen, n);
        const auto s = l.scale();
        const auto bound = 4 * s;
        const auto box = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound)));
        const auto oracle = box_count(l, box, bound);
        const auto sh = shell_sizes_scaled(l, bound);
        for (std::int64_t v = 0; v <= bound; ++v) {
            const auto it = oracle.find(v);
            CHECK(sh.count_scaled(v) == (it == oracle.end() ? 0 : it->second));
        }
    }
}

TEST_CASE("property: lattice route to minimum weight agrees with brute force") {
    int compared = 0;
    for (const std::int64_t m : {2, 3, 4, 5, 6}) {
        for (const std::size_t n : {4, 8}) {
            SearchOptions opts;
            opts.budget = 8192;
            opts.seed = static_cast<std::uint64_t>(100 * m) + n;
            opts.max_results = 3;
            for (const auto& spec : search_negacirculant(Modulus(m), n, opts)) {
                const auto c = four_negacirculant_code(spec);
                const auto exact = min_euclidean_weight_bruteforce(c);
                const auto cert = min_euclidean_weight_via_lattice(c);
                if (cert.exact) {
                    CHECK(cert.value == exact);
                } else {
                    CHECK(cert.value == m * m);
                    CHECK(exact >= m * m);
                }
                ++compared;
            }
        }
    }
    CHECK(compared >= 20);
}
