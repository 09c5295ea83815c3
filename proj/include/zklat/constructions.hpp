#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zklat/code.hpp"
#include "zklat/ring.hpp"

namespace zklat {

using ResidueMatrix = std::vector<ResidueVector>;

/// Row i+1 is row i shifted right by one, with the wrapped entry negated.
ResidueMatrix negacirculant(const ResidueVector& first_row);

struct NegacirculantSpec {
    Modulus modulus;
    ResidueVector first_row_a;
    ResidueVector first_row_b;

    NegacirculantSpec(Modulus mod, ResidueVector a, ResidueVector b);

    std::size_t block_size() const noexcept { return first_row_a.size(); }
    std::size_t code_length() const noexcept { return 4 * block_size(); }

    friend bool operator==(const NegacirculantSpec&, const NegacirculantSpec&) = default;
};

/// First entry (i, j) where AA^T + BB^T differs from -I, if any.
struct ConditionViolation {
    std::size_t row, col;
    Residue found, expected;
};
std::optional<ConditionViolation> check_negation_condition(const NegacirculantSpec& spec);

/// Generator rows [ I_2m | A B ; -B^T A^T ].
ResidueMatrix four_negacirculant_generator(const NegacirculantSpec& spec);

/// The self-dual code generated by the four-negacirculant matrix; throws
/// ConstructionError when AA^T + BB^T ≠ -I.
LinearCode four_negacirculant_code(const NegacirculantSpec& spec);

struct SearchOptions {
    std::uint64_t budget = 1 << 16;  // candidate pairs drawn in total
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::size_t max_results = 0;     // 0: keep everything found within budget
};

/// Random search over first-row pairs. Candidates pass the diagonal of
/// AA^T + BB^T before the full check. For lengths divisible by 8 only Type II
/// results are kept. Results are identical for any thread count.
std::vector<NegacirculantSpec> search_negacirculant(const Modulus& mod, std::size_t target_length,
                                                    const SearchOptions& options = {});

}  // namespace zklat
