#pragma once

#include <cstdint>

#include "exspec/graph.hpp"
#include "exspec/matrix.hpp"

namespace exspec {

enum class LevelFlavor { adjacency, laplacian };

// The level-n matrix of a graph: rows/columns indexed by the n-subsets of
// vertices in SubsetIndexer order. Adjacency flavor is a 0/1 matrix with zero
// diagonal (itself the adjacency matrix of a graph on C(N,n) vertices);
// laplacian flavor carries the edge boundary of each subset on the diagonal.
struct LevelMatrix {
    SymmetricIntMatrix base;
    int n_vertices;
    int level;
    LevelFlavor flavor;
};

// Levels whose index set would exceed this are refused with guard_error.
inline constexpr std::uint64_t kMaxLevelDim = 50000;

// Throws guard_error when C(n_vertices, level) > kMaxLevelDim; otherwise
// returns the dimension.
std::uint64_t checked_level_dim(int n_vertices, int level);

// Entry (i,j) is G_{a,b} when the subsets of ranks i,j differ by swapping a
// for b (symmetric difference {a,b}), else 0. n in [0, N]; n=0 gives the 1x1
// zero vacuum block, n=1 the adjacency matrix.
LevelMatrix level_matrix(const Graph& g, int n);

// Laplacian flavor: off-diagonal -G_{a,b} under the same rule, diagonal the
// edge boundary of the subset. n in [1, N]; n=1 gives D - A.
LevelMatrix level_laplacian(const Graph& g, int n);

// Level-2 matrix assembled from the explicit four-term Kronecker-delta
// formula over the pair indexing functions. Kept as an independent
// construction for cross-validation against level_matrix(g, 2).
LevelMatrix level_matrix_via_eq4(const Graph& g);

// The adjacency-flavor level matrix reinterpreted as a graph on C(N,n)
// vertices, so it can feed back into every graph-level tool.
Graph level_graph(const Graph& g, int n);

std::string flavor_name(LevelFlavor f);

}  // namespace exspec
