#include "zklat/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "zklat/errors.hpp"

namespace zklat {

ResidueMatrix negacirculant(const ResidueVector& first_row) {
    const auto m = first_row.size();
    if (m == 0) throw InputError("negacirculant needs a nonempty first row");
    ResidueMatrix rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ResidueVector r(first_row.modulus(), m);
        for (std::size_t j = 0; j < m; ++j) {
            // Entry (i, j) is r_{j-i}, negated when the index wraps.
            if (j >= i) {
                r.set(j, first_row[j - i]);
            } else {
                r.set(j, -first_row[j + m - i]);
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

NegacirculantSpec::NegacirculantSpec(Modulus mod, ResidueVector a, ResidueVector b)
    : modulus(mod), first_row_a(std::move(a)), first_row_b(std::move(b)) {
    if (!(first_row_a.modulus() == modulus) || !(first_row_b.modulus() == modulus))
        throw InputError("negacirculant rows must use the construction modulus");
    if (first_row_a.size() != first_row_b.size()) throw InputError("r_A and r_B differ in length");
    if (first_row_a.empty()) throw InputError("negacirculant rows must be nonempty");
}

namespace {

// (X Y^T)_{ij} = row_i(X) · row_j(Y)
Residue row_product(const ResidueVector& x, const ResidueVector& y) { return inner_product(x, y); }

}  // namespace

std::optional<ConditionViolation> check_negation_condition(const NegacirculantSpec& spec) {
    const auto a = negacirculant(spec.first_row_a);
    const auto b = negacirculant(spec.first_row_b);
    const auto& mod = spec.modulus;
    const auto m = spec.block_size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto s = mod.reduce(row_product(a[i], a[j]) + row_product(b[i], b[j]));
            const auto expected = i == j ? mod.reduce(-1) : 0;
            if (s != expected) return ConditionViolation{i, j, s, expected};
        }
    return std::nullopt;
}

ResidueMatrix four_negacirculant_generator(const NegacirculantSpec& spec) {
    const auto a = negacirculant(spec.first_row_a);
    const auto b = negacirculant(spec.first_row_b);
    const auto m = spec.block_size();
    const auto n = 4 * m;
    ResidueMatrix rows;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        ResidueVector r(spec.modulus, n);
        r.set(i, 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (i < m) {
                r.set(2 * m + j, a[i][j]);
                r.set(3 * m + j, b[i][j]);
            } else {
                const auto t = i - m;
                r.set(2 * m + j, -b[j][t]);  // (-B^T)_{t,j}
                r.set(3 * m + j, a[j][t]);   // (A^T)_{t,j}
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

LinearCode four_negacirculant_code(const NegacirculantSpec& spec) {
    if (auto bad = check_negation_condition(spec)) {
        throw ConstructionError("AA^T + BB^T != -I: entry (" + std::to_string(bad->row) + ", " +
                                std::to_string(bad->col) + ") is " + std::to_string(bad->found) +
                                ", expected " + std::to_string(bad->expected));
    }
    return LinearCode(spec.modulus, spec.code_length(), four_negacirculant_generator(spec));
}

namespace {

constexpr std::uint64_t kBatchSize = 4096;

std::vector<NegacirculantSpec> search_batch(const Modulus& mod, std::size_t m, bool want_type_ii,
                                            std::uint64_t seed, std::uint64_t batch, std::uint64_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> residue(0, mod.value() - 1);
    const auto target = mod.reduce(-1);

    std::vector<NegacirculantSpec> found;
    std::vector<std::int64_t> a(m), b(m);
    for (std::uint64_t t = 0; t < count; ++t) {
        std::int64_t diag = 0;
        for (auto& x : a) {
            x = residue(rng);
            diag += x * x;
        }
        for (auto& x : b) {
            x = residue(rng);
            diag += x * x;
        }
        if (mod.reduce(diag) != target) continue;
        NegacirculantSpec spec(mod, ResidueVector::reduced(mod, a), ResidueVector::reduced(mod, b));
        if (check_negation_condition(spec)) continue;
        if (want_type_ii && !type_ii_by_generators(four_negacirculant_code(spec))) continue;
        found.push_back(std::move(spec));
    }
    return found;
}

}  // namespace

std::vector<NegacirculantSpec> search_negacirculant(const Modulus& mod, std::size_t target_length,
                                                    const SearchOptions& options) {
    if (target_length == 0 || target_length % 4 != 0)
        throw InputError("four-negacirculant codes have length divisible by 4");
    const auto m = target_length / 4;
    const bool want_type_ii = target_length % 8 == 0 && mod.is_even();
    const auto batches = (options.budget + kBatchSize - 1) / kBatchSize;

    std::vector<std::vector<NegacirculantSpec>> per_batch(batches);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < batches;) {
            const auto count = std::min(kBatchSize, options.budget - i * kBatchSize);
            per_batch[i] = search_batch(mod, m, want_type_ii, options.seed, i, count);
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<NegacirculantSpec> out;
    std::set<std::pair<std::vector<Residue>, std::vector<Residue>>> seen;
    for (auto& batch : per_batch)
        for (auto& spec : batch) {
            auto key = std::pair{std::vector<Residue>(spec.first_row_a.entries().begin(), spec.first_row_a.entries().end()),
                                 std::vector<Residue>(spec.first_row_b.entries().begin(), spec.first_row_b.entries().end())};
            if (!seen.insert(std::move(key)).second) continue;
            out.push_back(std::move(spec));
            if (options.max_results != 0 && out.size() == options.max_results) return out;
        }
    return out;
}

}  // namespace zklat
