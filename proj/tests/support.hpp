#pragma once

#include "symhecke/catalog.hpp"

#include <random>
#include <string>
#include <vector>

#ifndef SYMHECKE_TEST_CATALOG
#define SYMHECKE_TEST_CATALOG "catalog"
#endif

namespace testsupport {

using namespace symhecke;

inline const std::string kCatalog = SYMHECKE_TEST_CATALOG;

inline const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> all = load_catalog(kCatalog);
    return all;
}

inline const CatalogEntry& entry(const std::string& name)
{
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e;
    throw std::runtime_error("no catalog entry " + name);
}

inline PairData pair(const std::string& name) { return build_pair(entry(name)); }

// Row echelon form over F_2 of 0/1 vectors; the span is what the tests compare.
inline std::vector<std::vector<int>> f2_echelon(std::vector<std::vector<int>> rows)
{
    std::vector<std::vector<int>> out;
    if (rows.empty()) return out;
    const std::size_t n = rows[0].size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = 0;
        while (p < rows.size() && !(rows[p][c] & 1)) ++p;
        if (p == rows.size()) continue;
        std::vector<int> pivot = rows[p];
        rows.erase(rows.begin() + long(p));
        for (auto& r : rows)
            if (r[c] & 1)
                for (std::size_t k = 0; k < n; ++k) r[k] = (r[k] + pivot[k]) & 1;
        for (auto& r : out)
            if (r[c] & 1)
                for (std::size_t k = 0; k < n; ++k) r[k] = (r[k] + pivot[k]) & 1;
        for (int& x : pivot) x &= 1;
        out.push_back(pivot);
    }
    return out;
}

// Image of (1 - theta) X_*(T) in X_*(A) / 2 X_*(A), in the coordinates of lattice_A.
inline std::vector<std::vector<int>> kernel_N_oracle(const RootDatum& d)
{
    RestrictedSystem rs = build_restricted(d);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < d.rank_T; ++i) {
        IntVec e(d.rank_T, 0);
        e[i] = 1;
        IntVec v = e;
        IntVec t = d.theta_cochar(e);
        for (int k = 0; k < d.rank_T; ++k) v[k] -= t[k];
        IntVec c = rs.coords_in_A(v);
        std::vector<int> row;
        for (Int x : c) row.push_back(int(((x % 2) + 2) % 2));
        rows.push_back(row);
    }
    return f2_echelon(rows);
}

inline IntMat block_diag(const IntMat& a, const IntMat& b)
{
    IntMat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline IntMat cartan_of(char type, int n)
{
    IntMat c = IntMat::identity(n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    auto link = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c(n - 1, n - 2) = -2;
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c(n - 2, n - 1) = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'G':
        link(0, 1);
        c(1, 0) = -3;
        break;
    }
    return c;
}

// Diagram involution of a simple type, as a permutation matrix (identity if none).
inline IntMat diagram_involution(char type, int n)
{
    IntMat p(n, n);
    for (int i = 0; i < n; ++i) p(i, i) = 1;
    if (type == 'A') {
        p = IntMat(n, n);
        for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1;
    } else if (type == 'D') {
        p(n - 1, n - 1) = p(n - 2, n - 2) = 0;
        p(n - 1, n - 2) = p(n - 2, n - 1) = 1;
    }
    return p;
}

struct Simple {
    char type;
    int n;
};

// Random symmetric-pair data: products of split, quasi-split and complex factors of small rank.
class PairGenerator {
public:
    explicit PairGenerator(std::uint64_t seed) : rng_(seed) {}

    CatalogEntry next(int max_rank = 4)
    {
        static const std::vector<Simple> simples = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                    {'C', 3}, {'D', 4}, {'G', 2}, {'A', 4}};
        CatalogEntry e;
        e.name = "generated_" + std::to_string(count_++);
        IntMat cartan, theta;
        int rank = 0;
        int factors = 1 + int(rng_() % 2);
        for (int f = 0; f < factors; ++f) {
            Simple s = simples[rng_() % simples.size()];
            int kind = int(rng_() % 3);  // 0 split, 1 quasi-split, 2 complex
            if (kind == 2 && 2 * s.n + rank > max_rank) kind = 0;
            if (s.n + rank > max_rank) continue;
            IntMat c = cartan_of(s.type, s.n), t;
            if (kind == 0) {
                t = IntMat(s.n, s.n);
                for (int i = 0; i < s.n; ++i) t(i, i) = -1;
            } else if (kind == 1) {
                IntMat p = diagram_involution(s.type, s.n);
                t = IntMat(s.n, s.n) - p;
            } else {
                c = block_diag(c, c);
                t = IntMat(2 * s.n, 2 * s.n);
                for (int i = 0; i < s.n; ++i) t(i, s.n + i) = t(s.n + i, i) = 1;
            }
            cartan = rank ? block_diag(cartan, c) : c;
            theta = rank ? block_diag(theta, t) : t;
            rank = cartan.rows();
            e.notes += std::string(e.notes.empty() ? "" : " x ") + (kind == 0 ? "split " : kind == 1 ? "quasi-split " : "complex ") +
                       s.type + std::to_string(s.n);
        }
        if (rank == 0) {
            cartan = cartan_of('A', 1);
            theta = IntMat(1, 1, -1);
            e.notes = "split A1";
        }
        e.cartan = cartan;
        e.theta = theta;
        e.kernel_N = kernel_N_oracle(make_datum(e.name, cartan, theta));
        return e;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    int count_ = 0;
};

inline SparseVec random_vector(std::mt19937_64& rng, int n, int nonzeros = 3)
{
    std::vector<std::pair<int, Int>> v;
    for (int k = 0; k < nonzeros; ++k) v.emplace_back(int(rng() % n), Int(rng() % 7) - 3);
    return sparse_canonical(std::move(v));
}

inline BraidWord random_braid(std::mt19937_64& rng, int gens, int len)
{
    BraidWord b;
    for (int k = 0; k < len; ++k) b.push_back({int(rng() % gens), rng() % 2 ? 1 : -1});
    return b;
}

}  // namespace testsupport
