#include "symhecke/sparse.hpp"

#include <algorithm>
#include <map>

namespace symhecke {

SparseVec sparse_canonical(std::vector<std::pair<int, Int>> v)
{
    std::sort(v.begin(), v.end());
    SparseVec out;
    for (auto [i, x] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += x;
        else
            out.emplace_back(i, x);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
    return out;
}

SparseMat SparseMat::identity(int n)
{
    SparseMat m;
    m.n = n;
    m.cols.resize(n);
    for (int i = 0; i < n; ++i) m.cols[i] = {{i, 1}};
    return m;
}

SparseMat SparseMat::from_dense(const IntMat& d)
{
    SparseMat m;
    m.n = d.rows();
    m.cols.resize(m.n);
    for (int j = 0; j < m.n; ++j)
        for (int i = 0; i < m.n; ++i)
            if (d(i, j) != 0) m.cols[j].emplace_back(i, d(i, j));
    return m;
}

IntMat SparseMat::to_dense() const
{
    IntMat d(n, n);
    for (int j = 0; j < n; ++j)
        for (auto [i, x] : cols[j]) d(i, j) = x;
    return d;
}

SparseVec SparseMat::apply(const SparseVec& v) const
{
    std::vector<std::pair<int, Int>> acc;
    for (auto [j, x] : v)
        for (auto [i, y] : cols[j]) acc.emplace_back(i, x * y);
    return sparse_canonical(std::move(acc));
}

IntVec SparseMat::apply(const IntVec& v) const
{
    IntVec out(n, 0);
    for (int j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        for (auto [i, y] : cols[j]) out[i] += v[j] * y;
    }
    return out;
}

SparseMat SparseMat::operator*(const SparseMat& o) const
{
    SparseMat m;
    m.n = n;
    m.cols.resize(n);
    for (int j = 0; j < n; ++j) m.cols[j] = apply(o.cols[j]);
    return m;
}

SparseMat SparseMat::operator+(const SparseMat& o) const
{
    SparseMat m;
    m.n = n;
    m.cols.resize(n);
    for (int j = 0; j < n; ++j) {
        std::vector<std::pair<int, Int>> acc(cols[j].begin(), cols[j].end());
        acc.insert(acc.end(), o.cols[j].begin(), o.cols[j].end());
        m.cols[j] = sparse_canonical(std::move(acc));
    }
    return m;
}

SparseMat SparseMat::operator-(const SparseMat& o) const { return *this + o.scaled(-1); }

SparseMat SparseMat::scaled(Int k) const
{
    SparseMat m = *this;
    for (auto& c : m.cols) {
        for (auto& e : c) e.second *= k;
        if (k == 0) c.clear();
    }
    return m;
}

bool SparseMat::is_zero() const
{
    return std::all_of(cols.begin(), cols.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseMat SparseMat::restrict_to(const std::vector<int>& idx, bool& ok) const
{
    std::map<int, int> pos;
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = int(k);
    SparseMat m;
    m.n = int(idx.size());
    m.cols.resize(m.n);
    ok = true;
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (auto [i, x] : cols[idx[k]]) {
            auto it = pos.find(i);
            if (it == pos.end()) {
                ok = false;
                continue;
            }
            m.cols[k].emplace_back(it->second, x);
        }
    for (auto& c : m.cols) c = sparse_canonical(std::move(c));
    return m;
}

}  // namespace symhecke
