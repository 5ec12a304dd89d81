#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exspec/graph.hpp"
#include "exspec/matrix.hpp"

namespace exspec::oracle {

inline constexpr int kMaxBruteForceVertices = 10;  // N! search
inline constexpr int kMaxBlockVertices = 14;       // 2^N basis table
inline constexpr int kMaxFullHamiltonianVertices = 8;

struct IsomorphismResult {
    // When set, maps g2's labels onto g1's: apply_permutation(g2, *witness) == g1.
    std::optional<Permutation> witness;

    bool isomorphic() const { return witness.has_value(); }
};

// Exhaustive backtracking search over vertex relabelings, pruned by degree
// partition and adjacency consistency. Returns the lexicographically least
// witness when one exists.
IsomorphismResult brute_force_isomorphic(const Graph& g1, const Graph& g2);

struct HamiltonianBlock {
    int level;
    std::vector<std::vector<int>> basis;  // n-subsets, lexicographic order
    SymmetricIntMatrix matrix;
};

// The n-excitation block of the exchange Hamiltonian sum over edges of
// (S+_i S-_j + S-_i S+_j), built by simulating the raising/lowering action of
// each edge term on the basis states, with unit coupling. Entry (i,j) counts
// the edge terms that map basis state j to basis state i. This deliberately
// avoids the symmetric-difference construction so that it can certify it.
HamiltonianBlock exciton_block(const Graph& g, int n);

// True iff exciton_block(g,n) agrees entrywise with level_matrix(g,n).
bool verify_block_equivalence(const Graph& g, int n);

struct HamiltonianEntry {
    std::uint32_t row;  // basis index = excitation bitmask (bit v-1 <=> vertex v excited)
    std::uint32_t col;
    int value;
};

// All 2^N basis states at once, as a sparse triple list. Used to check that
// the Hamiltonian is exactly block diagonal across excitation counts.
std::vector<HamiltonianEntry> full_hamiltonian(const Graph& g);

}  // namespace exspec::oracle
