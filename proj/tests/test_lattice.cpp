#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "zklat/enumerate.hpp"
#include "zklat/errors.hpp"
#include "zklat/lattice.hpp"

using namespace zklat;

namespace {

LinearCode hamming8() {
    return LinearCode::from_rows(Modulus(2), {{1, 1, 1, 1, 0, 0, 0, 0},
                                              {0, 0, 1, 1, 1, 1, 0, 0},
                                              {0, 0, 0, 0, 1, 1, 1, 1},
                                              {1, 0, 1, 0, 1, 0, 1, 0}});
}

LatticeBasis transformed(const LatticeBasis& l, const IntMatrix& u) {
    return LatticeBasis(l.scale(), u * l.rows(), l.modulus());
}

}  // namespace

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(LatticeBasis(1, IntMatrix::from_rows({{1, 0}, {2, 0}}, 2), 1), InputError);
    CHECK_THROWS_AS(LatticeBasis(1, IntMatrix(2, 3), 1), InputError);
    // 3·Z^2 is not contained in Z·(2,0) + Z·(0,1).
    CHECK_THROWS_AS(LatticeBasis(1, IntMatrix::from_rows({{2, 0}, {0, 1}}, 2), 3), InputError);
    CHECK_NOTHROW(LatticeBasis(1, IntMatrix::from_rows({{2, 0}, {0, 1}}, 2), 2));
}

TEST_CASE("standard lattice invariants") {
    const auto z8 = standard_lattice(8);
    const auto inv = lattice_invariants(z8);
    CHECK(inv.determinant == 1);
    CHECK(inv.unimodular);
    CHECK(inv.odd);
    CHECK(!inv.even);
    // √2·Z^3.
    const auto r2 = lattice_invariants(LatticeBasis(2, IntMatrix::identity(3, 2), 2));
    CHECK(r2.determinant == 8);
    CHECK(r2.even);
    CHECK(!r2.unimodular);
}

TEST_CASE("construction A of the Hamming code is E8") {
    const auto e8 = construction_a(hamming8());
    CHECK(e8.scale() == 2);
    const auto inv = lattice_invariants(e8);
    CHECK(inv.unimodular);
    CHECK(inv.even);
    const auto sh = shell_sizes(e8, 8);
    CHECK(sh.count(0) == 1);
    CHECK(sh.count(2) == 240);
    CHECK(sh.count(4) == 2160);
    CHECK(sh.count(6) == 6720);
    CHECK(sh.count(8) == 17520);
    CHECK(sh.count(1) == 0);
    CHECK(sh.count(3) == 0);
    CHECK_THROWS_AS(construction_a(LinearCode::from_rows(Modulus(2), {{1, 1, 0, 0}})), DomainError);
}

TEST_CASE("Z^8 shells and D8") {
    const auto sh = shell_sizes(standard_lattice(8), 2);
    CHECK(sh.count(1) == 16);
    CHECK(sh.count(2) == 112);
    const auto d8 = even_sublattice(standard_lattice(8));
    CHECK(!d8.input_was_even);
    CHECK(lattice_invariants(d8.lattice).determinant == 4);
    CHECK(lattice_invariants(d8.lattice).even);
    CHECK(shell_sizes(d8.lattice, 2).count(2) == 112);
    const auto e8 = construction_a(hamming8());
    const auto same = even_sublattice(e8);
    CHECK(same.input_was_even);
    CHECK(same_lattice(same.lattice, e8));
}

TEST_CASE("dual lattice") {
    const auto d8 = even_sublattice(standard_lattice(8)).lattice;
    const auto dd = dual_lattice(d8);
    CHECK(lattice_invariants(dd).determinant == mpq_class(1, 4));
    // D8* contains Z^8 and the half-integral all-½ vector.
    REQUIRE(dd.scale() == 4);
    const auto z = standard_lattice(8).rescaled(2);
    const std::vector<std::int64_t> half(8, 1);
    CHECK(dd.contains(half));
    for (std::size_t i = 0; i < 8; ++i) CHECK(dd.contains(z.rows().row(i)));
    CHECK(same_lattice(dual_lattice(standard_lattice(8)), standard_lattice(8)));
}

TEST_CASE("even neighbors of Z^8 are E8") {
    const auto nbrs = even_neighbors(standard_lattice(8));
    REQUIRE(nbrs.size() == 2);
    for (const auto& n : nbrs) {
        const auto inv = lattice_invariants(n);
        CHECK(inv.even);
        CHECK(inv.unimodular);
        CHECK(shell_sizes(n, 4).count(2) == 240);
        CHECK(shell_sizes(n, 4).count(4) == 2160);
    }
    CHECK(!same_lattice(nbrs[0], nbrs[1]));
    CHECK_THROWS_AS(even_neighbors(construction_a(hamming8())), DomainError);
}

TEST_CASE("lattice file round trip") {
    const auto e8 = construction_a(hamming8());
    std::stringstream buf;
    write_lattice(buf, e8);
    const auto back = read_lattice(buf);
    CHECK(back.scale() == e8.scale());
    CHECK(same_lattice(back, e8));
    std::stringstream bad("dimension 2\nscale 1\n1 0\n");
    CHECK_THROWS_AS(read_lattice(bad), InputError);
    std::stringstream comment("# E-free\ndimension 2\nscale 1\n1 0\n0 1\n");
    CHECK(same_lattice(read_lattice(comment), standard_lattice(2)));
}

TEST_CASE("unscaling") {
    const auto z = standard_lattice(4);
    const auto z3 = z.rescaled(3);
    CHECK(z3.scale() == 9);
    CHECK(same_lattice(z3.try_unscale(3), z));
    CHECK(same_lattice(standard_lattice(4, 2).try_unscale(2), standard_lattice(4)));
    const auto odd = LatticeBasis(2, IntMatrix::identity(4, 2), 2);
    CHECK(same_lattice(odd.try_unscale(2), odd));
}

TEST_CASE("property: invariants survive unimodular basis changes") {
    testing::Gen gen(51);
    const auto base = construction_a(hamming8());
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = gen.unimodular(8, 20);
        const auto l = transformed(base, u);
        CHECK(same_lattice(l, base));
        CHECK(lattice_invariants(l).determinant == 1);
        CHECK(lattice_invariants(l).even);
        CHECK(shell_sizes(l, 4).count(4) == 2160);
        CHECK(same_lattice(l.canonical(), base.canonical()));
    }
}

TEST_CASE("property: construction A of self-dual codes is unimodular") {
    testing::Gen gen(52);
    int seen = 0;
    for (int trial = 0; trial < 400 && seen < 15; ++trial) {
        const Modulus m(gen.uniform(2, 6));
        const auto n = static_cast<std::size_t>(2 * gen.uniform(1, 3));
        const auto c = gen.code(m, n, n / 2);
        if (!is_self_dual(c)) continue;
        ++seen;
        const auto inv = lattice_invariants(construction_a(c));
        CHECK(inv.unimodular);
        CHECK(inv.even == is_type_ii(c));
    }
    // The sum of two copies of ⟨(1,1)⟩ over Z_2 is always available.
    CHECK(lattice_invariants(construction_a(LinearCode::from_rows(Modulus(2), {{1, 1}}))).unimodular);
}
