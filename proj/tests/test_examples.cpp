#include <doctest.h>

// Small worked examples across modules.

#include "zklat/catalog.hpp"
#include "zklat/constructions.hpp"
#include "zklat/enumerate.hpp"
#include "zklat/errors.hpp"
#include "zklat/frame.hpp"
#include "zklat/lattice.hpp"
#include "zklat/modforms.hpp"

using namespace zklat;

namespace {

const Modulus z4(4);

LinearCode span(std::vector<std::vector<std::int64_t>> rows) { return LinearCode::from_rows(z4, rows); }

}  // namespace

TEST_CASE("ring examples") {
    CHECK(rho(3, Modulus::from_k(2)) == -1);
    CHECK(rho(7, Modulus::from_k(5)) == -3);
    CHECK(rho(0, Modulus::from_k(6)) == 0);
    CHECK(euclidean_weight(ResidueVector(z4, std::vector<Residue>(8, 1))) == 8);
    CHECK(euclidean_weight(ResidueVector(Modulus(8), {5})) == 9);
    CHECK(inner_product(ResidueVector(z4, {2}), ResidueVector(z4, {2})) == 0);
    CHECK(inner_product(ResidueVector(z4, {1, 1}), ResidueVector(z4, {1, 1})) == 2);
    CHECK(inner_product(ResidueVector(z4, {1, 0}), ResidueVector(z4, {0, 1})) == 0);
}

TEST_CASE("code examples") {
    CHECK(span({{1, 0}, {0, 1}}).howell_form() ==
          std::vector<ResidueVector>{ResidueVector(z4, {1, 0}), ResidueVector(z4, {0, 1})});
    CHECK(span({{2, 0}, {0, 2}}).howell_form() ==
          std::vector<ResidueVector>{ResidueVector(z4, {2, 0}), ResidueVector(z4, {0, 2})});
    CHECK(span({{1, 1}, {2, 2}}).howell_form() == std::vector<ResidueVector>{ResidueVector(z4, {1, 1})});

    CHECK(span({{1, 1}}).cardinality() == 4);
    CHECK(span({{2, 0}, {0, 2}}).cardinality() == 4);
    CHECK(dual(LinearCode::full(z4, 2)) == LinearCode::zero(z4, 2));
    CHECK(dual(span({{2}})) == span({{2}}));
    CHECK(dual(span({{1, 1}})) == span({{1, 3}}));

    CHECK(is_self_dual(span({{2}})));
    CHECK(!is_self_dual(span({{1, 1}})));
    CHECK(!is_type_ii(span({{2}})));
    CHECK(!is_type_ii(span({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}})));

    CHECK(enumerate_codewords(span({{1, 1}})).size() == 4);
    CHECK(enumerate_codewords(LinearCode::zero(z4, 3)) == std::vector<ResidueVector>{ResidueVector(z4, 3)});
    const auto w = swe(span({{1, 1}}));
    CHECK(w.coefficient({2, 0, 0}) == 1);
    CHECK(w.coefficient({0, 2, 0}) == 2);
    CHECK(w.coefficient({0, 0, 2}) == 1);
    CHECK(w.terms().size() == 3);
    CHECK(swe(LinearCode::zero(z4, 5)).coefficient({5, 0, 0}) == 1);
    CHECK(swe(Catalog::bundled().seed_for(2).code()).total() == 256);

    CHECK(min_euclidean_weight_bruteforce(span({{1, 1}})) == 2);
    CHECK(min_euclidean_weight_bruteforce(span({{2}})) == 4);
    CHECK(extremal_bound(24, Modulus::from_k(1)) == 8);
    CHECK(extremal_bound(56, Modulus::from_k(4)) == 48);
    CHECK(extremal_bound(72, Modulus::from_k(6)) == 96);
}

TEST_CASE("construction examples") {
    const Modulus m(10);
    const auto two = negacirculant(ResidueVector(m, {3, 4}));
    CHECK(two[1] == ResidueVector(m, {6, 3}));
    CHECK(negacirculant(ResidueVector(m, {7})).size() == 1);
    const NegacirculantSpec zero(m, ResidueVector(m, 3), ResidueVector(m, 3));
    CHECK_THROWS_AS(four_negacirculant_code(zero), ConstructionError);

    const auto cat = Catalog::bundled();
    const auto& c1064 = cat.find("C_{10,64}");
    CHECK(c1064.modulus().value() == 10);
    CHECK(c1064.length() == 64);
    const auto c856 = cat.find("C_{8,56}").code();
    CHECK(is_self_dual(c856));
    CHECK(is_type_ii(c856));

    SearchOptions opts;
    opts.budget = 4096;
    const auto four = search_negacirculant(Modulus::from_k(1), 4, opts);
    REQUIRE(!four.empty());
    for (const auto& s : four) {
        CHECK(is_self_dual(four_negacirculant_code(s)));
        CHECK(!is_type_ii(four_negacirculant_code(s)));
    }
    CHECK(!search_negacirculant(Modulus::from_k(6), 8, opts).empty());
}

TEST_CASE("lattice examples") {
    const auto z = construction_a(span({{2}}));
    CHECK(same_lattice(z.try_unscale(2), standard_lattice(1)));
    CHECK(lattice_invariants(z).odd);
    CHECK(lattice_invariants(LatticeBasis(4, IntMatrix::identity(2, 4), 4)).determinant == 16);

    const auto d2 = even_sublattice(standard_lattice(2)).lattice;
    CHECK(lattice_invariants(d2).determinant == 4);
    CHECK(d2.contains(std::vector<std::int64_t>{1, 1}));
    CHECK(!d2.contains(std::vector<std::int64_t>{1, 0}));
    CHECK_THROWS_AS(even_neighbors(standard_lattice(4)), DomainError);

    const auto cat = Catalog::bundled();
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto l = construction_a(cat.seed_for(k).code());
        const auto reduced = lll_reduce(l).basis;
        for (std::size_t i = 0; i < 8; ++i) CHECK(reduced.gram()(i, i) == 2 * l.scale());
    }
    CHECK(shell_sizes(standard_lattice(5), 0).counts() == std::map<std::int64_t, std::uint64_t>{{0, 1}});
    CHECK(min_euclidean_weight_via_lattice(cat.seed_for(4).code()).value == 16);
    const auto via = min_euclidean_weight_via_lattice(span({{2}}));
    CHECK(via.exact);
    CHECK(via.value == 4);
}

TEST_CASE("frame examples") {
    const auto d = double_frame(Frame{1, IntMatrix::identity(2), 1});
    CHECK(d.norm == 2);
    CHECK(d.vectors == IntMatrix::from_rows({{1, 1}, {1, -1}}, 2));
    const auto c = Catalog::bundled().find("C_{5,48}").code();
    const auto f = standard_frame(c);
    CHECK(f.size() == 48);
    CHECK(f.norm == 5);
    const auto f2 = double_frame(f);
    CHECK(f2.norm == 10);
    CHECK(is_frame(f2));
    CHECK(lattice_invariants(even_sublattice(construction_a(c)).lattice).determinant == 4);
}

TEST_CASE("series examples") {
    const auto f0 = f_series(0, Modulus::from_k(3), 30);
    CHECK(f0.at(0) == 1);
    CHECK(f0.at(6) == 2);
    CHECK(f0.at(24) == 2);
    CHECK(f0.at(12) == 0);
    const auto j = 2;
    const auto dec = decompose_e4_delta(e4(12).pow(j).truncated(12), j, 0);
    CHECK(dec.coefficients == std::vector<mpz_class>{1});
    CHECK(dec.remainder.is_zero());
    const auto seed = theta_from_swe(swe(Catalog::bundled().seed_for(5).code()), 8);
    const auto sd = decompose_e4_delta(seed, 1, 0);
    CHECK(sd.coefficients == std::vector<mpz_class>{1});
    CHECK(sd.remainder.is_zero());
}
