#include "zklat/enumerate.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "zklat/errors.hpp"

namespace zklat {

ShellTable::ShellTable(std::int64_t scale, std::int64_t max_scaled_norm)
    : scale_(scale), max_scaled_(max_scaled_norm) {
    counts_[0] = 1;
}

std::uint64_t ShellTable::count(std::int64_t norm) const { return count_scaled(norm * scale_); }

std::uint64_t ShellTable::count_scaled(std::int64_t scaled_norm) const {
    auto it = counts_.find(scaled_norm);
    return it == counts_.end() ? 0 : it->second;
}

std::optional<std::int64_t> ShellTable::min_nonzero_scaled() const {
    for (const auto& [norm, c] : counts_)
        if (norm > 0 && c > 0) return norm;
    return std::nullopt;
}

void ShellTable::add(std::int64_t scaled_norm, std::uint64_t n) { counts_[scaled_norm] += n; }

std::string MinNormResult::to_string() const {
    std::ostringstream os;
    if (integral_value()) {
        os << value();
    } else {
        mpq_class q(scaled_value, scale);
        q.canonicalize();
        os << q.get_str();
    }
    return os.str();
}

namespace {

using real = long double;

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::atomic<std::size_t> done{0};
    std::size_t total = 0;
    std::uint64_t budget = 0;
    std::uint64_t checkpoint_every = 0;
    std::mutex checkpoint_mutex;
    const std::function<void(const EnumerationProgress&)>* checkpoint = nullptr;
};

struct Task {
    std::vector<std::int64_t> top;  // x values for levels n-1 .. n-top.size()
};

/// Fincke–Pohst depth-first search over coefficient vectors in the reduced
/// basis. Only one vector of each ±pair is visited: along the all-zero prefix
/// the next coordinate is restricted to be nonnegative.
class Enumerator {
public:
    Enumerator(const IntMatrix& gram, const std::vector<real>& r_diag, const std::vector<real>& mu,
               std::int64_t max_scaled, Shared* shared)
        : n_(gram.rows()),
          gram_(gram),
          r_(r_diag),
          mu_(mu),
          max_scaled_(max_scaled),
          bound_(static_cast<real>(max_scaled) * (1 + 1e-6L) + 1e-9L),
          shared_(shared),
          x_(n_, 0),
          partsums_((n_ + 1) * (n_ + 1), 0),
          begin_(n_ + 1, 0) {}

    std::map<std::int64_t, std::uint64_t> counts;

    // Collect all prefixes with `depth` levels fixed.
    void collect(std::size_t depth, std::vector<Task>& out) {
        std::vector<std::int64_t> prefix;
        collect_rec(n_ - 1, 0, true, depth, prefix, out);
    }

    void run(const Task& task) {
        reset_partsums();
        real partial = 0;
        bool zero_prefix = true;
        const auto depth = task.top.size();
        for (std::size_t d = 0; d < depth; ++d) {
            const auto level = n_ - 1 - d;
            const real c = center_at(level);
            x_[level] = task.top[d];
            const real diff = static_cast<real>(x_[level]) - c;
            partial += r_[level] * diff * diff;
            zero_prefix = zero_prefix && x_[level] == 0;
        }
        if (depth == n_) {
            leaf(zero_prefix);
            return;
        }
        reset_partsums();
        recurse(n_ - 1 - depth, partial, zero_prefix);
        flush();
    }

private:
    real& ps(std::size_t i, std::size_t j) { return partsums_[i * (n_ + 1) + j]; }
    real mu(std::size_t i, std::size_t j) const { return mu_[i * n_ + j]; }

    void reset_partsums() {
        for (auto& v : partsums_) v = 0;
        for (std::size_t i = 0; i <= n_; ++i) begin_[i] = n_ - 1;
    }

    // Center for `level` from scratch (used only while replaying task prefixes).
    real center_at(std::size_t level) const {
        real c = 0;
        for (std::size_t j = level + 1; j < n_; ++j) c -= static_cast<real>(x_[j]) * mu(j, level);
        return c;
    }

    void collect_rec(std::size_t level, real partial, bool zero_prefix, std::size_t depth,
                     std::vector<std::int64_t>& prefix, std::vector<Task>& out) {
        if (prefix.size() == depth) {
            out.push_back(Task{prefix});
            return;
        }
        const real c = center_at(level);
        const real rem = bound_ - partial;
        if (rem < 0) return;
        const real w = std::sqrt(rem / r_[level]);
        auto lo = static_cast<std::int64_t>(std::ceil(c - w));
        const auto hi = static_cast<std::int64_t>(std::floor(c + w));
        if (zero_prefix && lo < 0) lo = 0;
        for (auto xi = lo; xi <= hi; ++xi) {
            const real d = static_cast<real>(xi) - c;
            const real p = partial + r_[level] * d * d;
            if (p > bound_) continue;
            x_[level] = xi;
            prefix.push_back(xi);
            if (level == 0 || prefix.size() == depth) {
                out.push_back(Task{prefix});
            } else {
                collect_rec(level - 1, p, zero_prefix && xi == 0, depth, prefix, out);
            }
            prefix.pop_back();
        }
        x_[level] = 0;
    }

    void leaf(bool zero) {
        if (zero) return;
        // Exact norm x^T G x in integers.
        std::int64_t norm = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (x_[i] == 0) continue;
            std::int64_t row = 0;
            for (std::size_t j = 0; j < n_; ++j)
                if (x_[j] != 0) row += gram_(i, j) * x_[j];
            norm += x_[i] * row;
        }
        if (norm <= max_scaled_) counts[norm] += 2;
    }

    void flush() {
        if (local_nodes_ == 0) return;
        const auto before = shared_->nodes.fetch_add(local_nodes_);
        const auto after = before + local_nodes_;
        local_nodes_ = 0;
        if (shared_->budget != 0 && after > shared_->budget) shared_->abort = true;
        if (shared_->checkpoint != nullptr && *shared_->checkpoint && shared_->checkpoint_every != 0 &&
            before / shared_->checkpoint_every != after / shared_->checkpoint_every) {
            std::lock_guard lock(shared_->checkpoint_mutex);
            (*shared_->checkpoint)(EnumerationProgress{after, shared_->done.load(), shared_->total});
        }
    }

    void recurse(std::size_t level, real partial, bool zero_prefix) {
        if (shared_->abort.load(std::memory_order_relaxed)) return;
        // Bring partial center sums for this level up to date.
        for (std::size_t j = begin_[level + 1]; j > level; --j)
            ps(level, j) = ps(level, j + 1) - static_cast<real>(x_[j]) * mu(j, level);
        if (level > 0 && begin_[level + 1] > begin_[level]) begin_[level] = begin_[level + 1];
        begin_[level + 1] = level + 1;
        const real c = ps(level, level + 1);

        const real rem = bound_ - partial;
        const real w = std::sqrt(rem / r_[level]);
        auto lo = static_cast<std::int64_t>(std::ceil(c - w));
        const auto hi = static_cast<std::int64_t>(std::floor(c + w));
        if (zero_prefix && lo < 0) lo = 0;
        for (auto xi = lo; xi <= hi; ++xi) {
            const real d = static_cast<real>(xi) - c;
            const real p = partial + r_[level] * d * d;
            ++local_nodes_;
            if (p > bound_) continue;
            x_[level] = xi;
            if (level > 0 && begin_[level] < level) begin_[level] = level;
            if (level == 0) {
                leaf(zero_prefix && xi == 0);
            } else {
                recurse(level - 1, p, zero_prefix && xi == 0);
            }
            if ((local_nodes_ & 0xFFF) == 0) {
                flush();
                if (shared_->abort.load(std::memory_order_relaxed)) break;
            }
        }
        x_[level] = 0;
        if (level > 0 && begin_[level] < level) begin_[level] = level;
    }

    std::size_t n_;
    const IntMatrix& gram_;
    const std::vector<real>& r_;
    const std::vector<real>& mu_;
    std::int64_t max_scaled_;
    real bound_;
    Shared* shared_;
    std::vector<std::int64_t> x_;
    std::vector<real> partsums_;
    std::vector<std::size_t> begin_;
    std::uint64_t local_nodes_ = 0;
};

struct Gso {
    std::vector<real> r_diag;
    std::vector<real> mu;
};

Gso gram_schmidt(const IntMatrix& gram) {
    const auto n = gram.rows();
    Gso g{std::vector<real>(n), std::vector<real>(n * n, 0)};
    std::vector<real> r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            real acc = static_cast<real>(gram(i, j));
            for (std::size_t k = 0; k < j; ++k) acc -= g.mu[j * n + k] * r[i * n + k];
            r[i * n + j] = acc;
            if (j < i) g.mu[i * n + j] = acc / r[j * n + j];
        }
        g.r_diag[i] = r[i * n + i];
        if (!(g.r_diag[i] > 0)) throw std::runtime_error("degenerate Gram–Schmidt data during enumeration");
    }
    return g;
}

}  // namespace

ShellTable shell_sizes_scaled(const LatticeBasis& lattice, std::int64_t max_scaled_norm,
                              const EnumerationOptions& options) {
    if (max_scaled_norm < 0) throw InputError("shell bound must be nonnegative");
    ShellTable table(lattice.scale(), max_scaled_norm);
    const auto n = lattice.dimension();
    if (max_scaled_norm == 0 || n == 0) return table;

    const auto reduced = lll_reduce(lattice).basis;
    const auto& gram = reduced.gram();
    const auto gso = gram_schmidt(gram);

    Shared shared;
    shared.budget = options.node_budget;
    shared.checkpoint = &options.checkpoint;
    shared.checkpoint_every = options.checkpoint_nodes;

    Enumerator planner(gram, gso.r_diag, gso.mu, max_scaled_norm, &shared);
    const unsigned threads = std::max(1u, options.threads);
    std::vector<Task> tasks;
    for (std::size_t depth = 1; depth <= n; ++depth) {
        tasks.clear();
        planner.collect(depth, tasks);
        if (tasks.size() >= 64 * static_cast<std::size_t>(threads) || depth == n || depth >= 8) break;
    }
    shared.total = tasks.size();

    std::vector<std::map<std::int64_t, std::uint64_t>> results(threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned id) {
        Enumerator e(gram, gso.r_diag, gso.mu, max_scaled_norm, &shared);
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            if (shared.abort) break;
            e.run(tasks[i]);
            ++shared.done;
        }
        results[id] = std::move(e.counts);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
        worker(0);
    }
    table.set_nodes(shared.nodes.load());
    if (shared.abort) {
        throw ResourceError("enumeration node budget of " + std::to_string(options.node_budget) +
                            " exhausted at scaled radius " + std::to_string(max_scaled_norm));
    }
    for (const auto& r : results)
        for (const auto& [norm, c] : r) table.add(norm, c);
    return table;
}

ShellTable shell_sizes(const LatticeBasis& lattice, std::int64_t max_norm, const EnumerationOptions& options) {
    if (max_norm < 0) throw InputError("shell bound must be nonnegative");
    return shell_sizes_scaled(lattice, max_norm * lattice.scale(), options);
}

MinNormResult min_norm(const LatticeBasis& lattice, const EnumerationOptions& options) {
    const auto n = lattice.dimension();
    if (n == 0) throw DomainError("minimum of a zero-dimensional lattice");
    const auto reduced = lll_reduce(lattice).basis;
    std::int64_t upper = reduced.gram()(0, 0);
    for (std::size_t i = 1; i < n; ++i) upper = std::min(upper, reduced.gram()(i, i));

    const auto s = lattice.scale();
    const auto inv = lattice_invariants(lattice);
    MinNormResult result;
    result.scale = s;

    auto finish = [&](const ShellTable& t) {
        const auto m = t.min_nonzero_scaled();
        if (!m) return false;
        result.scaled_value = *m;
        result.kissing = t.count_scaled(*m);
        return true;
    };

    if (!inv.integral) {
        auto t = shell_sizes_scaled(reduced, upper, options);
        result.nodes = t.nodes();
        finish(t);
        return result;
    }

    // Integral: only multiples of `step` can occur, so radius r finding nothing
    // certifies min > r.
    const auto step = inv.even ? 2 * s : s;
    EnumerationOptions opts = options;
    std::uint64_t spent = 0;
    for (std::int64_t r = step;; r += step) {
        const auto radius = std::min(r, upper);
        if (opts.node_budget != 0) {
            if (spent >= options.node_budget)
                throw ResourceError("node budget exhausted while certifying the minimum", radius / s);
            opts.node_budget = options.node_budget - spent;
        }
        try {
            auto t = shell_sizes_scaled(reduced, radius, opts);
            spent += t.nodes();
            result.nodes = spent;
            if (finish(t)) return result;
        } catch (const ResourceError&) {
            // Every radius below this one was enumerated completely.
            throw ResourceError("node budget exhausted while certifying the minimum; no nonzero vector of norm < " +
                                    std::to_string(radius / s),
                                radius / s);
        }
        if (radius == upper) throw std::logic_error("enumeration missed a basis vector");
    }
}

WeightCertificate min_euclidean_weight_via_lattice(const LinearCode& code, const EnumerationOptions& options) {
    const auto m = code.modulus().value();
    const auto lattice = construction_a(code);
    try {
        const auto mn = min_norm(lattice, options);
        if (mn.value() < m) return {m * mn.value(), true};
        return {m * m, false};
    } catch (const ResourceError& e) {
        const auto floor = std::min<std::int64_t>(e.certified_floor(), m);
        return {m * floor, false};
    }
}

}  // namespace zklat
