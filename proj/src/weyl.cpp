#include "symhecke/weyl.hpp"

#include "symhecke/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace symhecke {

CoxeterGroup::CoxeterGroup(int dim, std::vector<IntMat> generators, std::size_t cap) : dim_(dim), gens_(std::move(generators))
{
    const int k = int(gens_.size());
    std::map<IntMat, int> seen;
    std::vector<IntMat> mats{IntMat::identity(dim_)};
    std::vector<int> len{0};
    std::vector<int> right;
    seen[mats[0]] = 0;
    for (std::size_t w = 0; w < mats.size(); ++w) {
        for (int s = 0; s < k; ++s) {
            IntMat m = mats[w] * gens_[s];
            auto it = seen.find(m);
            int idx;
            if (it == seen.end()) {
                if (mats.size() >= cap) throw std::runtime_error("enumeration cap exceeded");
                idx = int(mats.size());
                seen.emplace(m, idx);
                mats.push_back(std::move(m));
                len.push_back(len[w] + 1);
            } else {
                idx = it->second;
            }
            right.push_back(idx);
        }
    }
    const int n = int(mats.size());
    std::vector<int> left(std::size_t(k) * n);
    for (int s = 0; s < k; ++s)
        for (int w = 0; w < n; ++w) left[std::size_t(s) * n + w] = seen.at(gens_[s] * mats[w]);

    std::vector<Word> words(n);
    for (int w = 1; w < n; ++w) {
        int s = 0;
        while (len[left[std::size_t(s) * n + w]] >= len[w]) ++s;
        words[w].push_back(s);
        const Word& rest = words[left[std::size_t(s) * n + w]];
        words[w].insert(words[w].end(), rest.begin(), rest.end());
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (len[a] != len[b]) return len[a] < len[b];
        return words[a] < words[b];
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    mats_.resize(n);
    words_.resize(n);
    lengths_.resize(n);
    right_.resize(std::size_t(n) * k);
    left_.resize(std::size_t(k) * n);
    for (int i = 0; i < n; ++i) {
        int o = order[i];
        mats_[i] = mats[o];
        words_[i] = words[o];
        lengths_[i] = len[o];
        for (int s = 0; s < k; ++s) {
            right_[std::size_t(i) * k + s] = pos[right[std::size_t(o) * k + s]];
            left_[std::size_t(s) * n + i] = pos[left[std::size_t(s) * n + o]];
        }
    }
    for (int i = 0; i < n; ++i) lookup_.emplace_back(mats_[i], i);
    std::sort(lookup_.begin(), lookup_.end());
    inv_.resize(n);
    for (int w = 0; w < n; ++w) {
        Word rev(words_[w].rbegin(), words_[w].rend());
        inv_[w] = from_word(rev);
    }
    for (int s = 0; s < k; ++s) gen_elems_.push_back(find(gens_[s]));
}

CoxeterGroup::CoxeterGroup(const CoxeterGroup& o)
    : dim_(o.dim_), gens_(o.gens_), mats_(o.mats_), words_(o.words_), lengths_(o.lengths_), left_(o.left_), right_(o.right_),
      inv_(o.inv_), gen_elems_(o.gen_elems_), lookup_(o.lookup_)
{
}

CoxeterGroup& CoxeterGroup::operator=(const CoxeterGroup& o)
{
    if (this == &o) return *this;
    dim_ = o.dim_;
    gens_ = o.gens_;
    mats_ = o.mats_;
    words_ = o.words_;
    lengths_ = o.lengths_;
    left_ = o.left_;
    right_ = o.right_;
    inv_ = o.inv_;
    gen_elems_ = o.gen_elems_;
    lookup_ = o.lookup_;
    cayley_.clear();
    bruhat_.clear();
    return *this;
}

int CoxeterGroup::find(const IntMat& m) const
{
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), m, [](const std::pair<IntMat, int>& e, const IntMat& x) { return e.first < x; });
    if (it == lookup_.end() || it->first != m) return -1;
    return it->second;
}

int CoxeterGroup::from_word(const Word& w) const
{
    int x = 0;
    for (int s : w) x = right(x, s);
    return x;
}

int CoxeterGroup::multiply(int a, int b) const
{
    if (!cayley_.empty()) return cayley_[std::size_t(a) * size() + b];
    for (int s : words_[b]) a = right(a, s);
    return a;
}

int CoxeterGroup::order_of(int w) const
{
    int k = 1;
    for (int x = w; x != 0; x = multiply(x, w)) ++k;
    return w == 0 ? 1 : k;
}

bool CoxeterGroup::is_reflection(int w) const
{
    if (w == 0 || multiply(w, w) != 0) return false;
    return rank(to_rat(mats_[w] - IntMat::identity(dim_))) == 1;
}

std::string CoxeterGroup::word_string(int w, const std::string& letter) const
{
    if (words_[w].empty()) return "1";
    std::ostringstream os;
    for (int s : words_[w]) os << letter << (s + 1);
    return os.str();
}

const std::vector<int>& CoxeterGroup::cayley() const
{
    std::call_once(cayley_once_, [this] {
        if (cayley_.empty()) cayley_ = kernels::cayley_parallel(*this);
    });
    return cayley_;
}

const std::vector<Bitset>& CoxeterGroup::bruhat_rows() const
{
    std::call_once(bruhat_once_, [this] {
        if (bruhat_.empty()) bruhat_ = kernels::bruhat_parallel(*this);
    });
    return bruhat_;
}

bool CoxeterGroup::bruhat_leq(int a, int b) const { return bit_test(bruhat_rows()[b], a); }

Word CoxeterGroup::max_reduced_word(int w) const
{
    Word out;
    while (w != 0) {
        int s = num_generators() - 1;
        while (length(left(s, w)) >= length(w)) --s;
        out.push_back(s);
        w = left(s, w);
    }
    return out;
}

BraidWord free_reduce(const BraidWord& b)
{
    BraidWord out;
    for (const BraidLetter& l : b) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

BraidWord braid_inverse(const BraidWord& b)
{
    BraidWord out;
    for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b)
{
    BraidWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

int WeylGroup::separating(const IntVec& x, const IntVec& y) const
{
    int c = 0;
    for (const IntVec& n : normals)
        if ((dot(n, x) > 0) != (dot(n, y) > 0)) ++c;
    return c;
}

WeylGroup build_weyl(const RestrictedSystem& rs, std::size_t cap)
{
    WeylGroup W;
    W.gram = rs.gram;
    W.chamber_point = rs.chamber_point;
    for (const ReflectionData& r : rs.reflections) {
        W.normals.push_back(r.normal);
        W.deltas.push_back(r.delta);
    }
    std::vector<IntMat> gens;
    for (std::size_t i = 0; i < rs.reflections.size(); ++i)
        if (W.separating(rs.chamber_point, rs.reflections[i].matrix * rs.chamber_point) == 1) {
            W.simple.push_back(int(i));
            gens.push_back(rs.reflections[i].matrix);
        }
    W.group = CoxeterGroup(rs.rank_A, gens, cap);
    W.elem_refl.assign(W.group.size(), -1);
    for (const ReflectionData& r : rs.reflections) {
        int e = W.group.find(r.matrix);
        if (e < 0) throw TheoryViolation("reflection not in the enumerated group");
        W.elem_refl[e] = int(W.refl_elem.size());
        W.refl_elem.push_back(e);
    }
    return W;
}

bool bruhat_leq(const WeylGroup& W, int w1, int w2) { return W.group.bruhat_leq(w1, w2); }

BraidWord braid_lift(const CoxeterGroup& G, int w)
{
    BraidWord b;
    for (int s : G.word(w)) b.push_back({s, 1});
    return b;
}

namespace {

bool sample_chamber(const WeylGroup& W, std::mt19937_64& rng, IntVec& out)
{
    const int k = W.rank();
    std::vector<IntVec> rows;
    for (int s : W.simple) rows.push_back(W.normals[s]);
    std::uniform_int_distribution<Int> pos(1, 1000), any(-1000, 1000);
    RatVec rhs;
    for (std::size_t i = 0; i < rows.size(); ++i) rhs.push_back(Rat(pos(rng)));
    for (int e = 0; e < k && int(rows.size()) < k; ++e) {
        IntVec unit(k, 0);
        unit[e] = 1;
        std::vector<IntVec> trial = rows;
        trial.push_back(unit);
        if (rank(to_rat(IntMat::from_rows(trial))) == int(trial.size())) {
            rows = trial;
            rhs.push_back(Rat(any(rng)));
        }
    }
    RatVec x;
    if (!solve(to_rat(IntMat::from_rows(rows)), rhs, x)) return false;
    Int den = 1;
    for (const Rat& v : x) den = std::lcm(den, v.denominator());
    out.assign(k, 0);
    for (int i = 0; i < k; ++i) out[i] = (x[i] * den).numerator();
    return std::all_of(W.normals.begin(), W.normals.end(), [&](const IntVec& n) { return dot(n, out) > 0; });
}

void run_trial(const WeylGroup& W, std::uint64_t seed, int trial, BruhatValueReport& rep, bool& ok)
{
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(trial)};
    std::mt19937_64 rng(seq);
    IntVec a0, l;
    bool found = false;
    for (int attempt = 0; attempt < 16 && !found; ++attempt) found = sample_chamber(W, rng, a0) && sample_chamber(W, rng, l);
    if (!found) throw std::runtime_error("chamber sampling failed after bounded retries");
    const CoxeterGroup& G = W.group;
    const int n = G.size();
    IntVec Gl = W.gram * l;
    std::vector<__int128> val(n);
    for (int w = 0; w < n; ++w) {
        IntVec e = G.matrix(w) * a0;
        __int128 v = 0;
        for (int i = 0; i < W.rank(); ++i) v += (__int128)e[i] * Gl[i];
        val[w] = v;
    }
    const auto& rows = G.bruhat_rows();
    ok = true;
    for (int w2 = 0; w2 < n; ++w2)
        for (int w1 = 0; w1 < n; ++w1) {
            if (w1 == w2 || !bit_test(rows[w2], w1)) continue;
            ++rep.comparisons;
            if (!(val[w1] > val[w2])) {
                if (ok) rep.witness = "trial " + std::to_string(trial) + ": " + G.word_string(w1) + " < " + G.word_string(w2);
                ok = false;
            }
        }
}

}  // namespace

BruhatValueReport check_bruhat_values_serial(const WeylGroup& W, int trials, std::uint64_t seed)
{
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    BruhatValueReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        bool ok;
        run_trial(W, seed, t, rep, ok);
        (ok ? rep.passes : rep.failures)++;
    }
    return rep;
}

BruhatValueReport check_bruhat_values(const WeylGroup& W, int trials, std::uint64_t seed)
{
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    W.group.bruhat_rows();
    std::vector<BruhatValueReport> parts(trials);
    std::vector<char> ok(trials, 0);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        bool k;
        run_trial(W, seed, t, parts[t], k);
        ok[t] = k;
    }
    BruhatValueReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        rep.comparisons += parts[t].comparisons;
        if (ok[t]) {
            ++rep.passes;
        } else {
            if (rep.failures == 0) rep.witness = parts[t].witness;
            ++rep.failures;
        }
    }
    return rep;
}

std::vector<int> simple_system_of_subgroup(const WeylGroup& W, const std::vector<int>& refl_subset)
{
    const CoxeterGroup& G = W.group;
    for (int t : refl_subset)
        if (W.elem_refl.at(t) < 0) throw std::invalid_argument("simple_system_of_subgroup: element is not a reflection");
    std::vector<char> member(G.size(), 0);
    for (int t : refl_subset) member[t] = 1;
    for (int t : refl_subset)
        for (int g : refl_subset)
            if (!member[G.multiply(G.multiply(g, t), g)])
                throw std::invalid_argument("simple_system_of_subgroup: reflection set is not closed under conjugation");
    std::vector<int> out;
    for (int t : refl_subset) {
        IntVec tl = G.matrix(t) * W.chamber_point;
        int c = 0;
        for (int r : refl_subset) {
            const IntVec& n = W.normals[W.elem_refl[r]];
            if ((dot(n, W.chamber_point) > 0) != (dot(n, tl) > 0)) ++c;
        }
        if (c == 1) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> degrees(const CoxeterGroup& G)
{
    std::vector<Int> P(G.max_length() + 1, 0);
    for (int w = 0; w < G.size(); ++w) P[G.length(w)]++;
    std::vector<int> out;
    for (int d = int(P.size()); d >= 2; --d) {
        while (true) {
            // divide by 1 + t + ... + t^(d-1) if exact
            if (int(P.size()) < d) break;
            std::vector<Int> q(P.size() - d + 1, 0), r = P;
            for (int i = int(q.size()) - 1; i >= 0; --i) {
                q[i] = r[i + d - 1];
                for (int j = 0; j < d; ++j) r[i + j] -= q[i];
            }
            if (!std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; })) break;
            P = q;
            out.push_back(d);
        }
    }
    if (P.size() != 1 || P[0] != 1) return {};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symhecke
