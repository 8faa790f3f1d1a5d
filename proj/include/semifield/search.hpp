// Constrained depth-first search for standard bases.
//
// Columns are assigned matrix-major (A_2 fully, then A_3, ...), column index
// ascending. While filling matrix t, an incremental echelon state is kept
// for every combination sum over a support {t} ∪ mu with mu ⊆ {1..t-1}; a
// candidate column is rejected as soon as it makes the known columns of any
// such combination linearly dependent. Combinations supported strictly below
// t were completed (full rank) while their top matrix was being filled, so a
// complete assignment has every nonzero combination invertible. Emitted
// bases are re-checked with verify_standard_basis regardless.

#ifndef SEMIFIELD_SEARCH_HPP
#define SEMIFIELD_SEARCH_HPP

#include <chrono>
#include <functional>
#include <vector>

#include "semifield/cube.hpp"

namespace semifield {

struct InconsistentConstraints : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partial assignment of the n matrices: per column, a mask of known
/// coordinate bits and their values. Construction enforces consistency with
/// the standard-basis conditions A_1 = I and first column of A_i = e_i.
class SearchConstraints {
public:
    explicit SearchConstraints(int n) : n_(n) {
        detail::check_dim(n);
        std::size_t cells = static_cast<std::size_t>(n) * n;
        mask_.assign(cells, 0);
        value_.assign(cells, 0);
        std::uint32_t full = full_mask();
        for (int j = 1; j <= n; ++j)
            merge(1, j, full, std::uint32_t{1} << (j - 1)); // A_1 = I
        for (int i = 1; i <= n; ++i)
            merge(i, 1, full, std::uint32_t{1} << (i - 1)); // first column e_i
    }

    int dim() const { return n_; }
    std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }

    void fix_matrix(int i, const Gf2Matrix& m) {
        detail::check_same_dim(n_, m.dim());
        for (int j = 1; j <= n_; ++j) merge(i, j, full_mask(), m.col_bits(j - 1));
    }

    void fix_column(int i, int j, const Gf2Vector& v) {
        detail::check_same_dim(n_, v.dim());
        merge(i, j, full_mask(), v.bits());
    }

    /// Pins individual known bits of a column (mask selects them).
    void fix_column_bits(int i, int j, std::uint32_t mask, std::uint32_t value) {
        merge(i, j, mask, value);
    }

    /// Pins the upper-left m×m blocks of A_1..A_m to the powers of the
    /// companion matrix of the given irreducible polynomial and zeroes their
    /// off-blocks, embedding F_{2^m} on span{e_1..e_m}.
    void set_subfield_block(int m, std::uint32_t poly) {
        if (m < 1 || m > n_)
            throw InconsistentConstraints("subfield block dimension " + std::to_string(m) +
                                          " out of range");
        if (!poly_irreducible(poly))
            throw InconsistentConstraints("subfield polynomial " + poly_to_string(poly) +
                                          " is not irreducible over GF(2)");
        Gf2Matrix c = companion_matrix(poly, m);
        Gf2Matrix power = Gf2Matrix::identity(m);
        std::uint32_t low = (std::uint32_t{1} << m) - 1;
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j)
                merge(i, j, full_mask(), power.col_bits(j - 1)); // block column, zero below
            for (int j = m + 1; j <= n_; ++j)
                merge(i, j, low, 0); // upper part of the off-block column is zero
            power = mat_mul(power, c);
        }
        subfield_block_ = {m, poly};
    }

    std::uint32_t known_mask(int i, int j) const { return mask_[idx(i, j)]; }
    std::uint32_t known_value(int i, int j) const { return value_[idx(i, j)]; }
    bool column_fixed(int i, int j) const { return mask_[idx(i, j)] == full_mask(); }

    std::optional<std::pair<int, std::uint32_t>> subfield_block() const { return subfield_block_; }

    /// Columns with at least one free bit, matrix-major.
    std::vector<std::pair<int, int>> free_columns() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (!column_fixed(i, j)) out.emplace_back(i, j);
        return out;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("matrix " + std::to_string(i) + " column " + std::to_string(j));
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    void merge(int i, int j, std::uint32_t mask, std::uint32_t value) {
        value &= mask;
        std::size_t k = idx(i, j);
        std::uint32_t overlap = mask_[k] & mask;
        if ((value_[k] ^ value) & overlap)
            throw InconsistentConstraints("conflicting constraints on matrix " +
                                          std::to_string(i) + ", column " + std::to_string(j));
        mask_[k] |= mask;
        value_[k] |= value;
    }

    int n_;
    std::vector<std::uint32_t> mask_, value_;
    std::optional<std::pair<int, std::uint32_t>> subfield_block_;
};

struct SearchBudget {
    std::optional<std::uint64_t> max_solutions;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> wall_clock;

    static SearchBudget unlimited() { return {}; }
};

struct SearchProgress {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    std::uint64_t solutions = 0;
};

using ProgressFn = std::function<void(const SearchProgress&)>;

struct SearchOutcome {
    std::vector<StandardBasis> bases;
    std::uint64_t nodes_visited = 0;
    std::uint64_t prunes = 0;
    bool exhausted = false;
    std::chrono::duration<double> elapsed{};
};

namespace detail {

class BasisSearcher {
public:
    BasisSearcher(const SearchConstraints& cons, const SearchBudget& budget, ProgressFn progress)
        : cons_(cons), budget_(budget), progress_(std::move(progress)), n_(cons.dim()),
          cur_(static_cast<std::size_t>(n_) + 1, Gf2Matrix(n_)) {}

    SearchOutcome run() {
        start_ = std::chrono::steady_clock::now();
        ctx_.reserve(static_cast<std::size_t>(n_)); // no reallocation mid-search
        fill_matrix(1);
        outcome_.exhausted = !stopped_;
        outcome_.elapsed = std::chrono::steady_clock::now() - start_;
        return outcome_;
    }

private:
    // Per-matrix context: combination columns over supports mu ⊆ {1..t-1}
    // and the echelon state of the combination with support mu ∪ {t}.
    struct MatrixContext {
        std::vector<std::array<std::uint32_t, max_dim>> comb;
        std::vector<EchelonStack> ech;
    };

    void fill_matrix(int t) {
        if (stopped_) return;
        if (t > n_) {
            emit_solution();
            return;
        }
        MatrixContext ctx;
        std::size_t supports = std::size_t{1} << (t - 1);
        ctx.comb.resize(supports);
        ctx.ech.resize(supports);
        ctx.comb[0].fill(0);
        for (std::size_t mu = 1; mu < supports; ++mu) {
            std::size_t top = std::bit_floor(mu);
            const Gf2Matrix& m = cur_[static_cast<std::size_t>(std::countr_zero(top)) + 1];
            for (int j = 0; j < n_; ++j)
                ctx.comb[mu][static_cast<std::size_t>(j)] =
                    ctx.comb[mu ^ top][static_cast<std::size_t>(j)] ^ m.col_bits(j);
        }
        ctx_.push_back(std::move(ctx));
        fill_column(t, 1);
        ctx_.pop_back();
    }

    void fill_column(int t, int j) {
        if (stopped_) return;
        if (j > n_) {
            fill_matrix(t + 1);
            return;
        }
        std::uint32_t mask = cons_.known_mask(t, j);
        std::uint32_t base = cons_.known_value(t, j);
        std::uint32_t free = cons_.full_mask() & ~mask;
        int free_bits[max_dim];
        int nfree = 0;
        for (std::uint32_t f = free; f; f &= f - 1) free_bits[nfree++] = std::countr_zero(f);

        MatrixContext& ctx = ctx_.back();
        std::size_t supports = ctx.ech.size();
        for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << nfree); ++counter) {
            if (!count_node()) return;
            std::uint32_t v = base;
            for (int b = 0; b < nfree; ++b)
                if ((counter >> b) & 1u) v |= std::uint32_t{1} << free_bits[b];

            std::size_t inserted = 0;
            bool ok = true;
            for (std::size_t mu = 0; mu < supports; ++mu) {
                if (!ctx.ech[mu].try_insert(v ^ ctx.comb[mu][static_cast<std::size_t>(j - 1)])) {
                    ok = false;
                    break;
                }
                ++inserted;
            }
            if (!ok) {
                for (std::size_t mu = 0; mu < inserted; ++mu) ctx.ech[mu].pop();
                ++outcome_.prunes;
                continue;
            }
            cur_[static_cast<std::size_t>(t)].set_col_bits(j - 1, v);
            fill_column(t, j + 1);
            for (std::size_t mu = 0; mu < supports; ++mu) ctx.ech[mu].pop();
            if (stopped_) return;
        }
    }

    void emit_solution() {
        StandardBasis b;
        b.n = n_;
        b.mats.assign(cur_.begin() + 1, cur_.end());
        // Soundness: never trust the pruning bookkeeping.
        if (!verify_standard_basis(b).passed) return;
        outcome_.bases.push_back(std::move(b));
        if (budget_.max_solutions && outcome_.bases.size() >= *budget_.max_solutions)
            stopped_ = true;
        report_progress();
    }

    bool count_node() {
        ++outcome_.nodes_visited;
        if (budget_.max_nodes && outcome_.nodes_visited > *budget_.max_nodes) {
            stopped_ = true;
            return false;
        }
        if ((outcome_.nodes_visited & 0xFFF) == 0) {
            if (budget_.wall_clock &&
                std::chrono::steady_clock::now() - start_ > *budget_.wall_clock) {
                stopped_ = true;
                return false;
            }
            if ((outcome_.nodes_visited & 0xFFFF) == 0) report_progress();
        }
        return true;
    }

    void report_progress() {
        if (progress_)
            progress_({outcome_.nodes_visited, outcome_.prunes,
                       static_cast<std::uint64_t>(outcome_.bases.size())});
    }

    const SearchConstraints& cons_;
    const SearchBudget& budget_;
    ProgressFn progress_;
    int n_;
    std::vector<Gf2Matrix> cur_; // cur_[i] = current assignment of A_i (1-based)
    std::vector<MatrixContext> ctx_;
    SearchOutcome outcome_;
    bool stopped_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Depth-first search over the free column bits. Deterministic for fixed
/// constraints and budget; exhausted = false when any budget bound stopped
/// the traversal early.
inline SearchOutcome search_standard_bases(const SearchConstraints& cons,
                                           const SearchBudget& budget = SearchBudget::unlimited(),
                                           ProgressFn progress = {}) {
    return detail::BasisSearcher(cons, budget, std::move(progress)).run();
}

/// Partitions the search tree by enumerating every assignment of the first
/// `depth` free columns (matrix-major order). Shards are disjoint, cover the
/// original space, and running them in order reproduces the sequential
/// traversal order.
inline std::vector<SearchConstraints> split_search_space(const SearchConstraints& cons,
                                                         int depth) {
    auto free_cols = cons.free_columns();
    if (depth < 0 || depth > static_cast<int>(free_cols.size()))
        throw std::invalid_argument("split depth " + std::to_string(depth) +
                                    " out of range [0, " + std::to_string(free_cols.size()) + "]");
    std::vector<SearchConstraints> shards{cons};
    for (int d = 0; d < depth; ++d) {
        auto [i, j] = free_cols[static_cast<std::size_t>(d)];
        std::vector<SearchConstraints> next;
        for (const SearchConstraints& shard : shards) {
            std::uint32_t mask = shard.known_mask(i, j);
            std::uint32_t base = shard.known_value(i, j);
            std::uint32_t free = shard.full_mask() & ~mask;
            int free_bits[max_dim];
            int nfree = 0;
            for (std::uint32_t f = free; f; f &= f - 1) free_bits[nfree++] = std::countr_zero(f);
            for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << nfree); ++counter) {
                std::uint32_t v = base;
                for (int b = 0; b < nfree; ++b)
                    if ((counter >> b) & 1u) v |= std::uint32_t{1} << free_bits[b];
                SearchConstraints child = shard;
                child.fix_column(i, j, Gf2Vector(cons.dim(), v));
                next.push_back(std::move(child));
            }
        }
        shards = std::move(next);
    }
    return shards;
}

} // namespace semifield

#endif
