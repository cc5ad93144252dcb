#include "symhecke/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>

namespace symhecke {

Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int gcd_of(const IntVec& v)
{
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

IntVec primitive(const IntVec& v)
{
    Int g = gcd_of(v);
    IntVec out = v;
    if (g > 1)
        for (Int& x : out) x /= g;
    return out;
}

bool is_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

RatMat to_rat(const IntMat& m)
{
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

IntMat to_int(const RatMat& m)
{
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).denominator() != 1) throw std::runtime_error("non-integral matrix entry");
            r(i, j) = m(i, j).numerator();
        }
    return r;
}

IntVec to_int(const RatVec& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].denominator() != 1) throw std::runtime_error("non-integral vector entry");
        r[i] = v[i].numerator();
    }
    return r;
}

namespace {

void swap_rows(IntMat& m, int a, int b)
{
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMat& m, int a, int b)
{
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_a <- row_a + k row_b
void add_row(IntMat& m, int a, int b, Int k)
{
    if (k == 0) return;
    for (int j = 0; j < m.cols(); ++j) m(a, j) += k * m(b, j);
}

void add_col(IntMat& m, int a, int b, Int k)
{
    if (k == 0) return;
    for (int i = 0; i < m.rows(); ++i) m(i, a) += k * m(i, b);
}

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Smith smith_normal_form(const IntMat& A)
{
    const int m = A.rows(), n = A.cols();
    Smith s{IntMat::identity(m), A, IntMat::identity(n), 0};
    IntMat& D = s.D;
    int t = 0;
    while (t < std::min(m, n)) {
        // pick the smallest nonzero entry of the remaining block as pivot
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (D(i, j) != 0 && (pi < 0 || std::abs(D(i, j)) < std::abs(D(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                Int q = floor_div(D(i, t), D(t, t));
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (D(i, t) != 0) {
                    swap_rows(D, t, i);
                    swap_rows(s.U, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                Int q = floor_div(D(t, j), D(t, t));
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (D(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(s.V, t, j);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility of the remaining block by the pivot
                for (int i = t + 1; i < m && clean; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (D(i, j) % D(t, t) != 0) {
                            add_row(D, t, i, 1);
                            add_row(s.U, t, i, 1);
                            clean = false;
                            break;
                        }
            }
        }
        if (D(t, t) < 0) {
            for (int j = 0; j < n; ++j) D(t, j) = -D(t, j);
            for (int j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

IntMat hermite_rows(const IntMat& A)
{
    IntMat H = A;
    const int m = H.rows(), n = H.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // Euclid on column c among rows r..m-1
        while (true) {
            int best = -1;
            for (int i = r; i < m; ++i)
                if (H(i, c) != 0 && (best < 0 || std::abs(H(i, c)) < std::abs(H(best, c)))) best = i;
            if (best < 0) break;
            swap_rows(H, r, best);
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                Int q = floor_div(H(i, c), H(r, c));
                add_row(H, i, r, -q);
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H(r, c) == 0) continue;
        if (H(r, c) < 0)
            for (int j = 0; j < n; ++j) H(r, j) = -H(r, j);
        for (int i = 0; i < r; ++i) add_row(H, i, r, -floor_div(H(i, c), H(r, c)));
        ++r;
    }
    IntMat out(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = H(i, j);
    return out;
}

IntMat integer_kernel(const IntMat& A)
{
    Smith s = smith_normal_form(A);
    const int n = A.cols();
    IntMat K(n - s.rank, n);
    for (int k = s.rank; k < n; ++k)
        for (int i = 0; i < n; ++i) K(k - s.rank, i) = s.V(i, k);
    return hermite_rows(K);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& A)
{
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
        int p = -1;
        for (int i = r; i < A.rows(); ++i)
            if (A(i, c) != Rat(0)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < A.cols(); ++j) std::swap(A(r, j), A(p, j));
        Rat inv = Rat(1) / A(r, c);
        for (int j = 0; j < A.cols(); ++j) A(r, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, c) == Rat(0)) continue;
            Rat f = A(i, c);
            for (int j = 0; j < A.cols(); ++j) A(i, j) -= f * A(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

int rank(RatMat A) { return int(rref(A).size()); }

RatMat inverse(const RatMat& A)
{
    const int n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::runtime_error("singular matrix");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

bool solve(const RatMat& B, const RatVec& x, RatVec& c)
{
    const int m = B.rows(), k = B.cols();
    RatMat aug(m, k + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) aug(i, j) = B(i, j);
        aug(i, k) = x[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == k) return false;
    if (int(piv.size()) != k) throw std::runtime_error("solve: matrix lacks full column rank");
    c.assign(k, Rat(0));
    for (int i = 0; i < k; ++i) c[piv[i]] = aug(i, k);
    return true;
}

std::vector<RatVec> rational_kernel(RatMat A)
{
    auto piv = rref(A);
    std::vector<bool> is_piv(A.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < A.cols(); ++f) {
        if (is_piv[f]) continue;
        RatVec v(A.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A(int(i), f);
        basis.push_back(v);
    }
    return basis;
}

namespace {

Int mod_p(Int a, Int p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

Int pow_mod(Int b, Int e, Int p)
{
    Int r = 1;
    b = mod_p(b, p);
    while (e > 0) {
        if (e & 1) r = Int((__int128)r * b % p);
        b = Int((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

using SparseRow = std::vector<std::pair<int, Int>>;

}  // namespace

int rank_mod_p(std::vector<std::vector<std::pair<int, Int>>> rows, int ncols, Int p, std::vector<Int>* kernel_vector)
{
    std::map<int, SparseRow> pivots;  // leading column -> monic row
    for (auto& raw : rows) {
        std::map<int, Int> acc;
        for (auto [c, v] : raw) {
            Int x = mod_p(v, p);
            if (x) acc[c] = mod_p(acc[c] + x, p);
        }
        while (true) {
            while (!acc.empty() && acc.begin()->second == 0) acc.erase(acc.begin());
            if (acc.empty()) break;
            auto [lead, coef] = *acc.begin();
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Int inv = pow_mod(coef, p - 2, p);
                SparseRow r;
                for (auto [c, v] : acc)
                    if (v) r.emplace_back(c, Int((__int128)v * inv % p));
                pivots.emplace(lead, std::move(r));
                break;
            }
            for (auto [c, v] : it->second) acc[c] = mod_p(acc[c] - Int((__int128)coef * v % p), p);
        }
    }
    const int rk = int(pivots.size());
    if (kernel_vector && rk == ncols - 1) {
        std::vector<Int> x(ncols, 0);
        int free_col = -1;
        for (int c = 0; c < ncols; ++c)
            if (!pivots.count(c)) free_col = c;
        x[free_col] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            Int s = 0;
            for (auto [c, v] : it->second)
                if (c != it->first) s = mod_p(s + Int((__int128)v * x[c] % p), p);
            x[it->first] = mod_p(-s, p);
        }
        for (Int& v : x)
            if (v > p / 2) v -= p;
        *kernel_vector = x;
    }
    return rk;
}

}  // namespace symhecke
