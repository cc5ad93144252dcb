#include "symhecke/hecke.hpp"

#include "symhecke/root_datum.hpp"

#include <mutex>

namespace symhecke {

HeckeRing::HeckeRing(std::shared_ptr<const CoxeterGroup> group, std::vector<int> params) : group_(std::move(group)), params_(std::move(params))
{
    if (int(params_.size()) != group_->num_generators()) throw std::invalid_argument("one parameter per generator required");
    for (int q : params_)
        if (q != 1 && q != -1) throw std::invalid_argument("Hecke parameters must be +1 or -1");
}

HeckeRing::Elem HeckeRing::add(const Elem& a, const Elem& b, Int k) const
{
    Elem out = a;
    for (auto [w, c] : b) {
        Int& v = out[w];
        v += k * c;
        if (v == 0) out.erase(w);
    }
    return out;
}

HeckeRing::Elem HeckeRing::scale(const Elem& a, Int k) const
{
    if (k == 0) return {};
    Elem out = a;
    for (auto& [w, c] : out) c *= k;
    return out;
}

HeckeRing::Elem HeckeRing::gen_left(int s, const Elem& x) const
{
    const CoxeterGroup& G = *group_;
    const Int q = params_[s];
    Elem out;
    auto bump = [&](int w, Int c) {
        if (c == 0) return;
        Int& v = out[w];
        v += c;
        if (v == 0) out.erase(w);
    };
    for (auto [w, c] : x) {
        int sw = G.left(s, w);
        if (G.length(sw) > G.length(w)) {
            bump(sw, c);
        } else {
            bump(w, (1 - q) * c);
            bump(sw, q * c);
        }
    }
    return out;
}

HeckeRing::Elem HeckeRing::gen_right(const Elem& x, int s) const
{
    const CoxeterGroup& G = *group_;
    const Int q = params_[s];
    Elem out;
    auto bump = [&](int w, Int c) {
        if (c == 0) return;
        Int& v = out[w];
        v += c;
        if (v == 0) out.erase(w);
    };
    for (auto [w, c] : x) {
        int ws = G.right(w, s);
        if (G.length(ws) > G.length(w)) {
            bump(ws, c);
        } else {
            bump(w, (1 - q) * c);
            bump(ws, q * c);
        }
    }
    return out;
}

HeckeRing::Elem HeckeRing::basis_product(int x, int y) const
{
    const long long key = (long long)x * rank() + y;
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Elem out = basis(y);
    const Word& wx = group_->word(x);
    for (auto it = wx.rbegin(); it != wx.rend(); ++it) out = gen_left(*it, out);
    std::unique_lock lock(memo_mutex_);
    memo_.emplace(key, out);
    return out;
}

HeckeRing::Elem HeckeRing::multiply(const Elem& x, const Elem& y) const
{
    Elem out;
    for (auto [a, ca] : x)
        for (auto [b, cb] : y) out = add(out, basis_product(a, b), ca * cb);
    return out;
}

HeckeRing::Elem HeckeRing::gen_inverse(int s) const
{
    const Int q = params_[s];
    Elem t = basis(group_->generator(s));
    return scale(add(t, one(), -(1 - q)), q);
}

HeckeRing::Elem HeckeRing::eta(const BraidWord& b) const
{
    Elem out = one();
    for (const BraidLetter& l : b) {
        if (l.exp == 1)
            out = gen_right(out, l.gen);
        else
            out = multiply(out, gen_inverse(l.gen));
    }
    return out;
}

SparseMat HeckeRing::left_matrix(int s) const
{
    SparseMat m;
    m.n = rank();
    m.cols.resize(m.n);
    for (int w = 0; w < m.n; ++w) {
        Elem e = gen_left(s, basis(w));
        m.cols[w] = SparseVec(e.begin(), e.end());
    }
    return m;
}

SparseMat HeckeRing::right_matrix(int s) const
{
    SparseMat m;
    m.n = rank();
    m.cols.resize(m.n);
    for (int w = 0; w < m.n; ++w) {
        Elem e = gen_right(basis(w), s);
        m.cols[w] = SparseVec(e.begin(), e.end());
    }
    return m;
}

SparseMat HeckeRing::left_matrix(const Elem& h) const
{
    SparseMat m;
    m.n = rank();
    m.cols.resize(m.n);
    for (int w = 0; w < m.n; ++w) {
        Elem e = multiply(h, basis(w));
        m.cols[w] = SparseVec(e.begin(), e.end());
    }
    return m;
}

HeckeRing::Elem HeckeRing::scale_generators(const Elem& x, const std::vector<int>& c) const
{
    Elem out;
    for (auto [w, v] : x) {
        Int f = 1;
        for (int s : group_->word(w)) f *= c[s];
        out[w] = v * f;
    }
    return out;
}

bool HeckeRing::generator_scaling_is_ring_map(const std::vector<int>& c) const
{
    const CoxeterGroup& G = *group_;
    for (int s = 0; s < G.num_generators(); ++s) {
        // (X - 1)(X + q) with X = c T_s
        Elem X = scale(basis(G.generator(s)), c[s]);
        Elem rel = multiply(add(X, one(), -1), add(X, one(), params_[s]));
        if (!rel.empty()) return false;
    }
    for (int s = 0; s < G.num_generators(); ++s)
        for (int t = s + 1; t < G.num_generators(); ++t) {
            int m = G.order_of(G.multiply(G.generator(s), G.generator(t)));
            Elem a = one(), b = one();
            for (int k = 0; k < m; ++k) {
                a = multiply(a, scale(basis(G.generator(k % 2 ? t : s)), c[k % 2 ? t : s]));
                b = multiply(b, scale(basis(G.generator(k % 2 ? s : t)), c[k % 2 ? s : t]));
            }
            if (a != b) return false;
        }
    return true;
}

std::vector<int> omega_scalars(const std::vector<int>& deltas)
{
    std::vector<int> c;
    for (int d : deltas) c.push_back(d % 2 ? 1 : -1);
    return c;
}

HeckeRing::Elem omega(const HeckeRing& H, const std::vector<int>& deltas, const HeckeRing::Elem& x)
{
    std::vector<int> c = omega_scalars(deltas);
    if (!H.generator_scaling_is_ring_map(c)) throw TheoryViolation("omega is not a ring map");
    return H.scale_generators(x, c);
}

RegularReps regular_reps(const HeckeRing& H)
{
    RegularReps r;
    for (int s = 0; s < H.group().num_generators(); ++s) {
        r.L.push_back(H.left_matrix(s));
        r.R.push_back(H.right_matrix(s));
    }
    return r;
}

}  // namespace symhecke
