#include "exspec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exspec {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw std::invalid_argument("permutation must have positive size");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation image " + std::to_string(v) +
                                        " out of range [1, " + std::to_string(n) + "]");
        if (hit[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("permutation image " + std::to_string(v) + " repeated");
        hit[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int v = 1; v <= size(); ++v) inv[static_cast<std::size_t>((*this)(v)) - 1] = v;
    return Permutation(std::move(inv));
}

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges) : n_(n_vertices) {
    if (n_ < 1) throw std::invalid_argument("graph must have at least one vertex");
    degrees_.assign(static_cast<std::size_t>(n_), 0);
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::invalid_argument("edge endpoint out of range [1, " + std::to_string(n_) +
                                        "]: {" + std::to_string(i) + ", " + std::to_string(j) + "}");
        if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + "}");
    for (auto [i, j] : edges_) {
        ++degrees_[static_cast<std::size_t>(i) - 1];
        ++degrees_[static_cast<std::size_t>(j) - 1];
    }
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

SymmetricIntMatrix adjacency_matrix(const Graph& g) {
    SymmetricIntMatrix m(g.n_vertices());
    for (auto [i, j] : g.edges()) m.set(i - 1, j - 1, 1);
    return m;
}

SymmetricIntMatrix laplacian_matrix(const Graph& g) {
    SymmetricIntMatrix m(g.n_vertices());
    for (auto [i, j] : g.edges()) m.set(i - 1, j - 1, -1);
    for (int v = 1; v <= g.n_vertices(); ++v) m.set(v - 1, v - 1, g.degree(v));
    return m;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(g.n_vertices()));
    for (int v = 1; v <= g.n_vertices(); ++v) seq.push_back(g.degree(v));
    std::sort(seq.begin(), seq.end(), std::greater<int>());
    return seq;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.n_vertices())
        throw std::invalid_argument("permutation size " + std::to_string(p.size()) +
                                    " does not match vertex count " +
                                    std::to_string(g.n_vertices()));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) edges.emplace_back(p(i), p(j));
    return Graph(g.n_vertices(), std::move(edges));
}

int connected_component_count(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [i, j] : g.edges()) {
        adj[static_cast<std::size_t>(i) - 1].push_back(j);
        adj[static_cast<std::size_t>(j) - 1].push_back(i);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int components = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start) - 1]) continue;
        ++components;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start) - 1] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v) - 1]) {
                if (!seen[static_cast<std::size_t>(w) - 1]) {
                    seen[static_cast<std::size_t>(w) - 1] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

}  // namespace exspec
