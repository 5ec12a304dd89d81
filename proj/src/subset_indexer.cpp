#include "exspec/subset_indexer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace exspec {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (a == kSaturated || b == kSaturated) return kSaturated;
    std::uint64_t s = a + b;
    return s < a ? kSaturated : s;
}
}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

SubsetIndexer::SubsetIndexer(int n_vertices, int level) : n_(n_vertices), k_(level) {
    if (n_ < 1) throw std::invalid_argument("subset indexer needs a positive vertex count");
    if (k_ < 0 || k_ > n_)
        throw std::invalid_argument("subset size " + std::to_string(k_) + " out of range [0, " +
                                    std::to_string(n_) + "]");
    // Pascal's triangle rows 0..n, columns 0..k, saturating on overflow.
    table_.assign(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(k_ + 1), 0);
    auto at = [this](int m, int j) -> std::uint64_t& {
        return table_[static_cast<std::size_t>(m) * static_cast<std::size_t>(k_ + 1) +
                      static_cast<std::size_t>(j)];
    };
    for (int m = 0; m <= n_; ++m) {
        at(m, 0) = 1;
        for (int j = 1; j <= std::min(m, k_); ++j)
            at(m, j) = (j == m) ? 1 : sat_add(at(m - 1, j - 1), at(m - 1, j));
    }
    size_ = at(n_, k_);
    if (size_ == kSaturated)
        throw std::overflow_error("C(" + std::to_string(n_) + ", " + std::to_string(k_) +
                                  ") exceeds 64 bits");
}

std::uint64_t SubsetIndexer::choose(int m, int j) const {
    if (j < 0 || j > m || m < 0) return 0;
    return table_[static_cast<std::size_t>(m) * static_cast<std::size_t>(k_ + 1) +
                  static_cast<std::size_t>(j)];
}

std::uint64_t SubsetIndexer::rank(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != k_)
        throw std::invalid_argument("subset has " + std::to_string(subset.size()) +
                                    " elements, expected " + std::to_string(k_));
    std::uint64_t r = 1;
    int prev = 0;
    for (int i = 0; i < k_; ++i) {
        const int v = subset[static_cast<std::size_t>(i)];
        if (v <= prev || v > n_)
            throw std::invalid_argument(
                "subset must be strictly increasing with elements in [1, " + std::to_string(n_) + "]");
        for (int u = prev + 1; u < v; ++u) r += choose(n_ - u, k_ - 1 - i);
        prev = v;
    }
    return r;
}

void SubsetIndexer::unrank_into(std::uint64_t r, std::vector<int>& out) const {
    if (r < 1 || r > size_)
        throw std::out_of_range("rank " + std::to_string(r) + " out of range [1, " +
                                std::to_string(size_) + "]");
    out.clear();
    std::uint64_t c = r - 1;
    int v = 1;
    for (int i = 0; i < k_; ++i) {
        while (choose(n_ - v, k_ - 1 - i) <= c) {
            c -= choose(n_ - v, k_ - 1 - i);
            ++v;
        }
        out.push_back(v);
        ++v;
    }
}

std::vector<int> SubsetIndexer::unrank(std::uint64_t r) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k_));
    unrank_into(r, out);
    return out;
}

Permutation induced_subset_permutation(const SubsetIndexer& indexer, const Permutation& p) {
    if (p.size() != indexer.n_vertices())
        throw std::invalid_argument("permutation size does not match the indexer's vertex count");
    const auto size = indexer.size();
    std::vector<int> images(static_cast<std::size_t>(size));
    std::vector<int> subset, mapped;
    for (std::uint64_t r = 1; r <= size; ++r) {
        indexer.unrank_into(r, subset);
        mapped.clear();
        for (int v : subset) mapped.push_back(p(v));
        std::sort(mapped.begin(), mapped.end());
        images[static_cast<std::size_t>(r) - 1] = static_cast<int>(indexer.rank(mapped));
    }
    return Permutation(std::move(images));
}

}  // namespace exspec
