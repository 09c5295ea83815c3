#include "zklat/errors.hpp"
#include "zklat/lattice.hpp"

namespace zklat {

namespace {

std::vector<std::int64_t> add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<std::int64_t> sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Index of the coset of `v` among `reps` modulo `sub`, or -1.
std::ptrdiff_t coset_of(const LatticeBasis& sublattice, const std::vector<std::vector<std::int64_t>>& reps,
                        std::span<const std::int64_t> v) {
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (sublattice.contains(sub(v, reps[i]))) return static_cast<std::ptrdiff_t>(i);
    return -1;
}

}  // namespace

std::vector<LatticeBasis> even_neighbors(const LatticeBasis& lattice) {
    const auto n = lattice.dimension();
    if (n % 8 != 0) throw DomainError("even unimodular lattices exist only in dimensions divisible by 8");
    const auto inv = lattice_invariants(lattice);
    if (!inv.unimodular) throw DomainError("neighbors are formed from a unimodular lattice");
    if (inv.even) throw DomainError("lattice is already even");

    const auto even = even_sublattice(lattice).lattice;
    const auto dual = dual_lattice(even);
    // Bring L0 and L to the dual's coordinates.
    std::int64_t t = 1;
    while (even.scale() * t * t < dual.scale()) ++t;
    if (even.scale() * t * t != dual.scale()) throw std::logic_error("dual scale is not a square multiple");
    const auto even_t = even.rescaled(t);
    const auto odd_t = lattice.rescaled(t);

    // Coset representatives of L0*/L0 in the order produced by the dual's HNF rows.
    std::vector<std::vector<std::int64_t>> reps{std::vector<std::int64_t>(n, 0)};
    for (std::size_t r = 0; r < dual.dimension(); ++r) {
        const auto g = dual.hnf().row(r);
        if (coset_of(even_t, reps, g) >= 0) continue;
        // Close the subgroup generated by reps and g.
        std::vector<std::vector<std::int64_t>> added;
        std::vector<std::int64_t> multiple(g.begin(), g.end());
        while (coset_of(even_t, reps, multiple) < 0) {
            for (const auto& rep : reps) added.push_back(add(rep, multiple));
            multiple = add(multiple, g);
        }
        reps.insert(reps.end(), added.begin(), added.end());
    }
    if (reps.size() != 4) throw std::logic_error("L0*/L0 should have order 4");

    std::vector<LatticeBasis> out;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (odd_t.contains(reps[i])) continue;  // the coset that rebuilds L itself
        IntMatrix gens = even_t.rows();
        gens.append_row(reps[i]);
        LatticeBasis candidate(dual.scale(), modular_hnf(gens, even_t.modulus()), even_t.modulus());
        candidate = candidate.try_unscale(t);
        const auto ci = lattice_invariants(candidate);
        if (ci.even && ci.unimodular) out.push_back(std::move(candidate));
    }
    return out;
}

}  // namespace zklat
