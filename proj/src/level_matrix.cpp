#include "exspec/level_matrix.hpp"

#include <stdexcept>
#include <string>

#include "exspec/errors.hpp"
#include "exspec/subset_indexer.hpp"

namespace exspec {

namespace {

// Visits every k-subset of `pool` (sorted ascending) in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int k, Fn&& visit) {
    const int m = static_cast<int>(pool.size());
    if (k < 0 || k > m) return;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < k; ++i)
            subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        visit(subset);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Inserts v into sorted `base`, writing the result to `out`.
void sorted_insert(const std::vector<int>& base, int v, std::vector<int>& out) {
    out.clear();
    bool placed = false;
    for (int x : base) {
        if (!placed && v < x) {
            out.push_back(v);
            placed = true;
        }
        out.push_back(x);
    }
    if (!placed) out.push_back(v);
}

// Shared edge-driven assembly. For each graph edge {a,b} and each
// (n-1)-subset T avoiding both, the subsets T+a and T+b differ by swapping
// a for b, which is exactly where an entry lands.
template <typename Emit>
void assemble(const Graph& g, const SubsetIndexer& indexer, int n, Emit&& emit) {
    if (n < 1) return;
    const int N = g.n_vertices();
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(N));
    std::vector<int> with_a, with_b;
    with_a.reserve(static_cast<std::size_t>(n));
    with_b.reserve(static_cast<std::size_t>(n));
    for (auto [a, b] : g.edges()) {
        others.clear();
        for (int v = 1; v <= N; ++v)
            if (v != a && v != b) others.push_back(v);
        for_each_combination(others, n - 1, [&](const std::vector<int>& t) {
            sorted_insert(t, a, with_a);
            sorted_insert(t, b, with_b);
            const int i = static_cast<int>(indexer.rank(with_a)) - 1;
            const int j = static_cast<int>(indexer.rank(with_b)) - 1;
            emit(i, j);
        });
    }
}

}  // namespace

std::uint64_t checked_level_dim(int n_vertices, int level) {
    std::uint64_t dim = 0;
    bool over = false;
    try {
        dim = binomial(n_vertices, level);
    } catch (const std::overflow_error&) {
        over = true;
    }
    if (over || dim > kMaxLevelDim) {
        std::string size = over ? "more than 2^64" : std::to_string(dim);
        std::string cost = "astronomical";
        if (!over && dim <= 1000000000)
            cost = std::to_string(static_cast<std::uint64_t>(static_cast<long double>(dim) *
                                                             static_cast<long double>(dim) * 12.0L /
                                                             1048576.0L)) +
                   " MiB dense plus an O(dim^3) eigensolve";
        throw guard_error("level " + std::to_string(level) + " at N=" + std::to_string(n_vertices) +
                          " has dimension C(N,n)=" + size + ", over the cap of " +
                          std::to_string(kMaxLevelDim) + " (estimated cost: " + cost + ")");
    }
    return dim;
}

LevelMatrix level_matrix(const Graph& g, int n) {
    const int N = g.n_vertices();
    if (n < 0 || n > N)
        throw std::invalid_argument("level " + std::to_string(n) + " out of range [0, " +
                                    std::to_string(N) + "]");
    const auto dim = checked_level_dim(N, n);
    SubsetIndexer indexer(N, n);
    SymmetricIntMatrix base(static_cast<int>(dim));
    assemble(g, indexer, n, [&](int i, int j) { base.set(i, j, 1); });
    return LevelMatrix{std::move(base), N, n, LevelFlavor::adjacency};
}

LevelMatrix level_laplacian(const Graph& g, int n) {
    const int N = g.n_vertices();
    if (n < 1 || n > N)
        throw std::invalid_argument("level " + std::to_string(n) + " out of range [1, " +
                                    std::to_string(N) + "]");
    const auto dim = checked_level_dim(N, n);
    SubsetIndexer indexer(N, n);
    SymmetricIntMatrix base(static_cast<int>(dim));
    assemble(g, indexer, n, [&](int i, int j) {
        base.set(i, j, -1);
        base.add(i, i, 1);  // the edge lies on the boundary of both subsets
        base.add(j, j, 1);
    });
    return LevelMatrix{std::move(base), N, n, LevelFlavor::laplacian};
}

LevelMatrix level_matrix_via_eq4(const Graph& g) {
    const int N = g.n_vertices();
    if (N < 2) throw std::invalid_argument("the pair-indexed construction needs at least 2 vertices");
    const auto dim = checked_level_dim(N, 2);
    SubsetIndexer indexer(N, 2);
    const SymmetricIntMatrix adj = adjacency_matrix(g);

    // alpha/beta: the pair of vertices indexed by each row/column.
    std::vector<int> alpha(static_cast<std::size_t>(dim)), beta(static_cast<std::size_t>(dim));
    std::vector<int> pair;
    for (std::uint64_t r = 1; r <= dim; ++r) {
        indexer.unrank_into(r, pair);
        alpha[static_cast<std::size_t>(r - 1)] = pair[0];
        beta[static_cast<std::size_t>(r - 1)] = pair[1];
    }

    SymmetricIntMatrix base(static_cast<int>(dim));
    auto a = [&](std::size_t i) { return alpha[i] - 1; };  // to 0-based matrix indices
    auto b = [&](std::size_t i) { return beta[i] - 1; };
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            int v = 0;
            if (a(i) == a(j)) v += adj(b(i), b(j));
            if (a(i) == b(j)) v += adj(b(i), a(j));
            if (b(i) == a(j)) v += adj(a(i), b(j));
            if (b(i) == b(j)) v += adj(a(i), a(j));
            base.set(static_cast<int>(i), static_cast<int>(j), v);
        }
    }
    return LevelMatrix{std::move(base), N, 2, LevelFlavor::adjacency};
}

Graph level_graph(const Graph& g, int n) {
    LevelMatrix lm = level_matrix(g, n);
    const int dim = lm.base.dim();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (lm.base(i, j) != 0) edges.emplace_back(i + 1, j + 1);
    return Graph(dim, std::move(edges));
}

std::string flavor_name(LevelFlavor f) {
    return f == LevelFlavor::adjacency ? "adjacency" : "laplacian";
}

}  // namespace exspec
