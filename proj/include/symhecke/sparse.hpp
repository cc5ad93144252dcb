#pragma once

#include "symhecke/linalg.hpp"

#include <utility>
#include <vector>

namespace symhecke {

using SparseVec = std::vector<std::pair<int, Int>>;  // sorted by index, no zeros

SparseVec sparse_canonical(std::vector<std::pair<int, Int>> v);

// Square integer operator stored by columns: cols[j] is the image of e_j.
struct SparseMat {
    int n = 0;
    std::vector<SparseVec> cols;

    static SparseMat identity(int n);
    static SparseMat from_dense(const IntMat& m);
    IntMat to_dense() const;

    SparseVec apply(const SparseVec& v) const;
    IntVec apply(const IntVec& v) const;
    SparseMat operator*(const SparseMat& o) const;  // (this o o)
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat scaled(Int k) const;
    bool operator==(const SparseMat& o) const { return n == o.n && cols == o.cols; }
    bool operator!=(const SparseMat& o) const { return !(*this == o); }
    bool is_zero() const;
    // Restriction to the coordinate subspace spanned by idx (idx sorted);
    // the result is in the basis idx; entries outside idx make ok false.
    SparseMat restrict_to(const std::vector<int>& idx, bool& ok) const;
};

}  // namespace symhecke
