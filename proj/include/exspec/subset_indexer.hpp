#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "exspec/graph.hpp"

namespace exspec {

// C(n, k); throws std::overflow_error if the result exceeds uint64.
std::uint64_t binomial(int n, int k);

// Bijection between the n-subsets of {1..N} and the ranks 1..C(N,n), in
// lexicographic order of the sorted subsets: {1,2} -> 1, {1,3} -> 2, ...
// At n=2 this reproduces the row-major pair numbering of the upper triangle.
class SubsetIndexer {
public:
    SubsetIndexer(int n_vertices, int level);

    int n_vertices() const { return n_; }
    int level() const { return k_; }
    std::uint64_t size() const { return size_; }

    // subset must be strictly increasing with elements in [1, N].
    std::uint64_t rank(std::span<const int> subset) const;

    std::vector<int> unrank(std::uint64_t r) const;
    void unrank_into(std::uint64_t r, std::vector<int>& out) const;

private:
    std::uint64_t choose(int m, int j) const;

    int n_;
    int k_;
    std::uint64_t size_;
    std::vector<std::uint64_t> table_;  // (n_+1) x (k_+1), saturating
};

// The permutation q on {1..C(N,n)} induced by p's action on n-subsets:
// q(rank(S)) = rank(p(S)). Conjugating a level matrix by q is the index-space
// image of relabeling the graph by p.
Permutation induced_subset_permutation(const SubsetIndexer& indexer, const Permutation& p);

}  // namespace exspec
