#pragma once

#include <utility>
#include <vector>

#include "exspec/matrix.hpp"

namespace exspec {

// Bijection on {1..size}. images()[i-1] is the image of vertex i.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int v) const { return images_[static_cast<std::size_t>(v) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Simple undirected graph: vertex labels 1..n_vertices, edge set stored as
// sorted pairs (i,j) with i < j. Immutable after construction.
class Graph {
public:
    // Accepts endpoint pairs in either order; rejects self-loops, duplicates
    // and out-of-range endpoints.
    Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v) - 1]; }

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
};

// Level-1 matrices and elementary invariants.
SymmetricIntMatrix adjacency_matrix(const Graph& g);
SymmetricIntMatrix laplacian_matrix(const Graph& g);  // L = D - A
std::vector<int> degree_sequence(const Graph& g);     // sorted descending

// Relabeled graph: edge {i,j} present iff {p^-1(i), p^-1(j)} is an edge of g.
Graph apply_permutation(const Graph& g, const Permutation& p);

int connected_component_count(const Graph& g);

}  // namespace exspec
