#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "zklat/code.hpp"
#include "zklat/lattice.hpp"

namespace zklat {

struct LllResult {
    LatticeBasis basis;
    IntMatrix transform;  // unimodular U with basis.rows() == U · input.rows()
};

/// LLL with Lovász parameter `delta`. Gram–Schmidt data is floating point,
/// but every basis update is an exact integer row operation, so the output
/// spans the input lattice regardless of rounding.
LllResult lll_reduce(const LatticeBasis& lattice, double delta = 0.99);

struct EnumerationProgress {
    std::uint64_t nodes = 0;
    std::size_t subtrees_done = 0;
    std::size_t subtrees_total = 0;
};

struct EnumerationOptions {
    std::uint64_t node_budget = 0;  // 0: unlimited
    unsigned threads = 1;
    /// Called from a worker thread roughly every `checkpoint_nodes` nodes.
    std::function<void(const EnumerationProgress&)> checkpoint;
    std::uint64_t checkpoint_nodes = std::uint64_t{1} << 26;
};

/// Number of lattice vectors per norm up to a bound. Norms are kept as
/// scaled integers (scale × true norm) so non-integral lattices work too.
class ShellTable {
public:
    ShellTable(std::int64_t scale, std::int64_t max_scaled_norm);

    std::int64_t scale() const noexcept { return scale_; }
    std::int64_t max_scaled_norm() const noexcept { return max_scaled_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

    /// Count at an integer true norm; 0 for empty shells.
    std::uint64_t count(std::int64_t norm) const;
    std::uint64_t count_scaled(std::int64_t scaled_norm) const;
    const std::map<std::int64_t, std::uint64_t>& counts() const noexcept { return counts_; }
    /// Smallest nonzero scaled norm present, if any.
    std::optional<std::int64_t> min_nonzero_scaled() const;

    void add(std::int64_t scaled_norm, std::uint64_t n);
    void set_nodes(std::uint64_t nodes) { nodes_ = nodes; }

private:
    std::int64_t scale_;
    std::int64_t max_scaled_;
    std::map<std::int64_t, std::uint64_t> counts_;
    std::uint64_t nodes_ = 0;
};

/// Exact shell counts for true norms ≤ max_norm (Fincke–Pohst on the
/// LLL-reduced basis, every candidate confirmed in integer arithmetic).
/// ResourceError when the node budget runs out; nothing is certified then.
ShellTable shell_sizes(const LatticeBasis& lattice, std::int64_t max_norm, const EnumerationOptions& options = {});
ShellTable shell_sizes_scaled(const LatticeBasis& lattice, std::int64_t max_scaled_norm,
                              const EnumerationOptions& options = {});

struct MinNormResult {
    std::int64_t scale = 1;
    std::int64_t scaled_value = 0;  // scale × min norm
    std::uint64_t kissing = 0;      // size of the minimal shell
    std::uint64_t nodes = 0;

    bool integral_value() const noexcept { return scaled_value % scale == 0; }
    std::int64_t value() const noexcept { return scaled_value / scale; }
    std::string to_string() const;
};

/// Exact minimum. For integral lattices the radius is raised one admissible
/// norm at a time, so a ResourceError carries the certified floor: no nonzero
/// vector of true norm below `certified_floor()` exists.
MinNormResult min_norm(const LatticeBasis& lattice, const EnumerationOptions& options = {});

/// Certified statement about d_E(C) from min A_m(C) = min{m, d_E/m}:
/// exact when the minimum is below m, a lower bound m² otherwise. A budget
/// overrun is downgraded to the lower bound m·(certified floor).
WeightCertificate min_euclidean_weight_via_lattice(const LinearCode& code, const EnumerationOptions& options = {});

}  // namespace zklat
