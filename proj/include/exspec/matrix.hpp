#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace exspec {

// Dense symmetric integer matrix. All writes go through set()/add(), which
// mirror (i,j) and (j,i), so the symmetry invariant holds by construction.
// Indices are 0-based.
class SymmetricIntMatrix {
public:
    explicit SymmetricIntMatrix(int dim)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {
        assert(dim >= 1);
    }

    int dim() const { return dim_; }

    int operator()(int i, int j) const {
        assert(in_range(i) && in_range(j));
        return a_[idx(i, j)];
    }

    void set(int i, int j, int v) {
        assert(in_range(i) && in_range(j));
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    // Adds v to entry (i,j) and its mirror; the diagonal is added once.
    void add(int i, int j, int v) { set(i, j, (*this)(i, j) + v); }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    std::int64_t max_abs_row_sum() const {
        std::int64_t best = 0;
        for (int i = 0; i < dim_; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < dim_; ++j) s += std::abs((*this)(i, j));
            if (s > best) best = s;
        }
        return best;
    }

    const std::vector<int>& data() const { return a_; }

    bool operator==(const SymmetricIntMatrix&) const = default;

private:
    bool in_range(int i) const { return i >= 0 && i < dim_; }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
    }

    int dim_;
    std::vector<int> a_;
};

}  // namespace exspec
