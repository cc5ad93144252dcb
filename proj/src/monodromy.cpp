#include "symhecke/monodromy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symhecke {

PairData build_pair(RootDatum datum, const std::vector<std::vector<int>>& kernel_N, const std::vector<int>& tau)
{
    PairData P;
    P.datum = std::move(datum);
    P.rs = build_restricted(P.datum);
    P.W = build_weyl(P.rs);
    P.G = build_component_group(P.datum, P.rs, P.W, kernel_N, tau);
    P.Wptr = std::make_shared<CoxeterGroup>(P.W.group);
    return P;
}

namespace {

int conj_by_inverse(const CoxeterGroup& G, int w, int sw)
{
    // w^{-1} s w, given sw = s w
    return G.multiply(G.inverse(w), sw);
}

SparseVec unit(int i) { return {{i, 1}}; }

std::string word_of(const CoxeterGroup& G, int w) { return G.word_string(w); }

}  // namespace

MonodromyRep build_lambda(const PairData& P, const Character& chi)
{
    const CoxeterGroup& G = P.W.group;
    const int n = G.size();
    MonodromyRep rep;
    rep.chi = chi;
    rep.w0 = coxeter_sub_W0(P.W, P.rs, P.G, chi);

    rep.coset_of.assign(n, -1);
    for (int w = 0; w < n; ++w) {
        if (rep.coset_of[w] >= 0) continue;
        std::vector<int> members;
        for (int e : rep.w0.elements) members.push_back(G.multiply(w, e));
        std::sort(members.begin(), members.end());
        for (int x : members) rep.coset_of[x] = int(rep.cosets.size());
        rep.coset_rep.push_back(w);
        rep.cosets.push_back(std::move(members));
    }

    for (int i = 0; i < P.num_simple(); ++i) {
        const bool odd = P.delta(i) % 2 == 1;
        SparseMat L, Linv;
        L.n = Linv.n = n;
        L.cols.resize(n);
        Linv.cols.resize(n);
        for (int w = 0; w < n; ++w) {
            int sw = G.left(i, w);
            bool twisted = odd && rep.w0.member[conj_by_inverse(G, w, sw)] >= 0;
            bool down = G.length(sw) < G.length(w);
            if (twisted && down) {
                L.cols[w] = sparse_canonical({{sw, -1}, {w, 2}});
                Linv.cols[w] = unit(sw);
            } else if (twisted) {
                L.cols[w] = unit(sw);
                Linv.cols[w] = sparse_canonical({{w, 2}, {sw, -1}});
            } else {
                L.cols[w] = unit(sw);
                Linv.cols[w] = unit(sw);
            }
        }
        rep.lambda.push_back(std::move(L));
        rep.lambda_inv.push_back(std::move(Linv));
    }

    for (int j = 0; j < P.G.rank; ++j) {
        F2 u = F2(1) << j;
        std::vector<int> diag(n);
        for (int w = 0; w < n; ++w) diag[w] = chi(P.G.act(G.inverse(w), u)) * P.G.tau_of(u);
        rep.i_action.push_back(std::move(diag));
    }
    return rep;
}

HeckeRing hecke_chi1(const PairData& P)
{
    std::vector<int> q;
    for (int i = 0; i < P.num_simple(); ++i) q.push_back(P.delta(i) % 2 ? -1 : 1);
    return HeckeRing(P.Wptr, q);
}

std::vector<SparseMat> build_mu_chi1(const PairData& P, const HeckeRing& H1)
{
    std::vector<int> deltas;
    for (int i = 0; i < P.num_simple(); ++i) deltas.push_back(P.delta(i));
    std::vector<SparseMat> mu;
    for (int i = 0; i < P.num_simple(); ++i) {
        HeckeRing::Elem image = omega(H1, deltas, HeckeRing::basis(H1.group().generator(i)));
        SparseMat m;
        m.n = H1.rank();
        m.cols.resize(m.n);
        for (int w = 0; w < m.n; ++w) {
            HeckeRing::Elem col = H1.multiply(HeckeRing::basis(w), image);
            m.cols[w] = SparseVec(col.begin(), col.end());
        }
        mu.push_back(std::move(m));
    }
    return mu;
}

std::vector<SparseMat> mu_closed_form(const PairData& P)
{
    const CoxeterGroup& G = P.W.group;
    std::vector<SparseMat> out;
    for (int i = 0; i < P.num_simple(); ++i) {
        const bool odd = P.delta(i) % 2 == 1;
        SparseMat m;
        m.n = G.size();
        m.cols.resize(m.n);
        for (int w = 0; w < m.n; ++w) {
            int ws = G.right(w, i);
            if (G.length(ws) < G.length(w)) continue;
            if (odd) {
                m.cols[w] = unit(ws);
                m.cols[ws] = sparse_canonical({{w, -1}, {ws, 2}});
            } else {
                m.cols[w] = {{ws, -1}};
                m.cols[ws] = {{w, -1}};
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

SparseVec apply_braid(const MonodromyRep& rep, const BraidWord& b, SparseVec v)
{
    for (auto it = b.rbegin(); it != b.rend(); ++it) v = (it->exp > 0 ? rep.lambda : rep.lambda_inv)[it->gen].apply(v);
    return v;
}

SparseMat braid_matrix(const MonodromyRep& rep, const BraidWord& b)
{
    SparseMat m = SparseMat::identity(rep.dim());
    for (auto it = b.rbegin(); it != b.rend(); ++it) m = (it->exp > 0 ? rep.lambda : rep.lambda_inv)[it->gen] * m;
    return m;
}

CheckResult check_braid_relations(const CoxeterGroup& G, const std::vector<SparseMat>& gens, const std::string& name)
{
    CheckResult r{name};
    for (int i = 0; i < G.num_generators(); ++i)
        for (int j = i + 1; j < G.num_generators(); ++j) {
            int m = G.order_of(G.multiply(G.generator(i), G.generator(j)));
            SparseMat a = SparseMat::identity(G.size()), b = a;
            for (int k = 0; k < m; ++k) {
                a = a * gens[k % 2 ? j : i];
                b = b * gens[k % 2 ? i : j];
            }
            ++r.cases;
            if (a != b) r.fail("braid relation fails for generators " + std::to_string(i + 1) + ", " + std::to_string(j + 1));
        }
    return r;
}

CheckResult check_quadratic(const std::vector<SparseMat>& gens, const std::vector<int>& q, const std::string& name)
{
    CheckResult r{name};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const SparseMat I = SparseMat::identity(gens[i].n);
        ++r.cases;
        if (!((gens[i] - I) * (gens[i] + I.scaled(q[i]))).is_zero()) r.fail("generator " + std::to_string(i + 1) + " fails (X - 1)(X + q) = 0");
    }
    return r;
}

CheckResult check_block_relations(const PairData& P, const MonodromyRep& rep)
{
    CheckResult r{"block quadratic relations"};
    const CoxeterGroup& G = P.W.group;
    const SparseMat I = SparseMat::identity(rep.dim());
    for (int i = 0; i < P.num_simple(); ++i) {
        const SparseMat& L = rep.lambda[i];
        SparseMat Q = (L - I) * (L - I);
        SparseMat S2 = L * L;
        for (std::size_t u = 0; u < rep.cosets.size(); ++u) {
            int wu = rep.coset_rep[u];
            bool stable = rep.w0.member[conj_by_inverse(G, wu, G.left(i, wu))] >= 0;
            bool unipotent = stable && P.delta(i) % 2 == 1;
            ++r.cases;
            for (int w : rep.cosets[u]) {
                bool ok = unipotent ? Q.cols[w].empty() : S2.cols[w] == unit(w);
                if (!ok) {
                    r.fail("relation fails for s" + std::to_string(i + 1) + " on the coset of " + word_of(G, wu));
                    break;
                }
            }
        }
    }
    return r;
}

CheckResult check_block_permutation(const PairData& P, const MonodromyRep& rep)
{
    CheckResult r{"coset block permutation"};
    const CoxeterGroup& G = P.W.group;
    for (int i = 0; i < P.num_simple(); ++i)
        for (std::size_t u = 0; u < rep.cosets.size(); ++u) {
            int target = rep.coset_of[G.left(i, rep.coset_rep[u])];
            ++r.cases;
            for (int w : rep.cosets[u])
                for (auto [x, c] : rep.lambda[i].cols[w])
                    if (rep.coset_of[x] != target) r.fail("s" + std::to_string(i + 1) + " does not send the coset of " + word_of(G, rep.coset_rep[u]) + " to its left translate");
        }
    return r;
}

CheckResult check_semidirect(const PairData& P, const MonodromyRep& rep)
{
    CheckResult r{"semidirect relation"};
    const CoxeterGroup& G = P.W.group;
    const int n = rep.dim();
    for (int i = 0; i < P.num_simple(); ++i)
        for (int j = 0; j < P.G.rank; ++j) {
            F2 su = P.G.act(G.generator(i), F2(1) << j);
            std::vector<int> d_su(n);
            for (int w = 0; w < n; ++w) d_su[w] = rep.chi(P.G.act(G.inverse(w), su)) * P.G.tau_of(su);
            ++r.cases;
            for (int w = 0; w < n; ++w) {
                SparseVec lhs = rep.lambda[i].cols[w];
                for (auto& e : lhs) e.second *= rep.i_action[j][w];
                SparseVec rhs = rep.lambda[i].cols[w];
                for (auto& e : rhs) e.second *= d_su[e.first];
                if (lhs != rhs) {
                    r.fail("lambda(s" + std::to_string(i + 1) + ") u_" + std::to_string(j + 1) + " != (s.u) lambda(s) at " + word_of(G, w));
                    break;
                }
            }
        }
    return r;
}

CheckResult check_matsumoto(const PairData& P, const MonodromyRep& rep, int max_elements)
{
    CheckResult r{"Matsumoto stability"};
    const CoxeterGroup& G = P.W.group;
    const int n = G.size();
    const int stride = n <= max_elements ? 1 : (n + max_elements - 1) / max_elements;
    for (int w = 0; w < n; w += stride) {
        Word other = G.max_reduced_word(w);
        if (other == G.word(w)) continue;
        BraidWord b1 = braid_lift(G, w), b2;
        for (int s : other) b2.push_back({s, 1});
        ++r.cases;
        if (braid_matrix(rep, b1) != braid_matrix(rep, b2)) r.fail("reduced words of " + word_of(G, w) + " act differently");
    }
    return r;
}

CheckResult quadratic_relation_check(const PairData& P, const MonodromyRep& rep)
{
    if (!rep.chi.trivial()) {
        CheckResult r = check_block_relations(P, rep);
        r.name = "quadratic relations";
        return r;
    }
    CheckResult r{"quadratic relations"};
    const SparseMat I = SparseMat::identity(rep.dim());
    auto check = [&](const SparseMat& M, int i, const std::string& what) {
        bool odd = P.delta(i) % 2 == 1;
        bool ok = odd ? ((M - I) * (M - I)).is_zero() : M * M == I;
        ++r.cases;
        if (!ok) r.fail(what + "(s" + std::to_string(i + 1) + ") fails its quadratic relation");
    };
    for (int i = 0; i < P.num_simple(); ++i) {
        check(rep.lambda[i], i, "lambda");
        if (rep.mu) check((*rep.mu)[i], i, "mu");
    }
    return r;
}

CheckResult check_mu_chi1(const PairData& P, const MonodromyRep& rep, const HeckeRing& H1)
{
    CheckResult r{"mu = R omega eta"};
    if (!rep.mu) {
        r.fail("mu not built");
        return r;
    }
    std::vector<int> deltas;
    for (int i = 0; i < P.num_simple(); ++i) deltas.push_back(P.delta(i));
    ++r.cases;
    if (!H1.generator_scaling_is_ring_map(omega_scalars(deltas))) r.fail("omega is not a ring map");
    std::vector<SparseMat> closed = mu_closed_form(P);
    const auto& mu = *rep.mu;
    for (int i = 0; i < P.num_simple(); ++i) {
        ++r.cases;
        if (mu[i] != closed[i]) r.fail("mu(s" + std::to_string(i + 1) + ") differs from the closed-form basis action");
        ++r.cases;
        if (rep.lambda[i] != H1.left_matrix(i)) r.fail("lambda(s" + std::to_string(i + 1) + ") differs from left multiplication by T_s");
        for (int j = 0; j < P.num_simple(); ++j) {
            ++r.cases;
            if (rep.lambda[i] * mu[j] != mu[j] * rep.lambda[i])
                r.fail("lambda(s" + std::to_string(i + 1) + ") and mu(s" + std::to_string(j + 1) + ") do not commute");
        }
    }
    for (int j = 0; j < P.G.rank; ++j) {
        ++r.cases;
        int t = P.G.tau_of(F2(1) << j);
        for (int v : rep.i_action[j])
            if (v != t) r.fail("I acts on the trivial-character module by something other than tau");
    }
    return r;
}

namespace {

std::vector<std::vector<std::pair<int, Int>>> rows_of(const SparseMat& M, std::vector<std::vector<std::pair<int, Int>>> rows = {})
{
    std::size_t base = rows.size();
    rows.resize(base + M.n);
    for (int j = 0; j < M.n; ++j)
        for (auto [i, x] : M.cols[j]) rows[base + i].emplace_back(j, x);
    return rows;
}

constexpr Int kPrime = 2147483647;

}  // namespace

CheckResult fundamental_class_check(const PairData& P, const MonodromyRep& rep)
{
    CheckResult r{"fundamental class"};
    const int n = rep.dim();
    const SparseMat I = SparseMat::identity(n);
    std::vector<std::vector<std::pair<int, Int>>> rows;
    for (const SparseMat& L : rep.lambda) rows = rows_of(L - I, std::move(rows));
    std::vector<Int> kv;
    int rk = rank_mod_p(rows, n, kPrime, &kv);
    ++r.cases;
    if (n - rk != 1) {
        r.fail("fixed space has dimension " + std::to_string(n - rk) + " modulo p");
        return r;
    }
    IntVec F(kv.begin(), kv.end());
    ++r.cases;
    for (const SparseMat& L : rep.lambda)
        if (L.apply(F) != F) {
            r.fail("lifted fixed vector is not fixed over Z");
            return r;
        }
    ++r.cases;
    if (F[0] == 0) r.fail("coefficient of v_1 in the fixed vector vanishes");
    if (rep.mu)
        for (int i = 0; i < P.num_simple(); ++i) {
            Int scalar = P.delta(i) % 2 ? 1 : -1;
            IntVec expect = F;
            for (Int& x : expect) x *= scalar;
            ++r.cases;
            if ((*rep.mu)[i].apply(F) != expect) r.fail("mu(s" + std::to_string(i + 1) + ") does not scale the fixed vector by (-1)^(delta+1)");
        }
    std::ostringstream os;
    os << "dimension 1, c_1 = " << F[0];
    if (r.pass) r.detail = os.str();
    return r;
}

CheckResult check_cyclicity(const PairData& P, const MonodromyRep& rep)
{
    CheckResult r{"v_1 cyclic for mu"};
    if (!rep.mu) {
        r.skipped = true;
        return r;
    }
    const CoxeterGroup& G = P.W.group;
    std::vector<std::vector<std::pair<int, Int>>> rows;
    for (int w = 0; w < G.size(); ++w) {
        SparseVec v = unit(0);
        const Word& word = G.word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = (*rep.mu)[*it].apply(v);
        rows.emplace_back(v.begin(), v.end());
    }
    ++r.cases;
    int rk = rank_mod_p(rows, G.size(), kPrime);
    if (rk != G.size()) r.fail("span of mu(b_w) v_1 has rank " + std::to_string(rk));
    return r;
}

CheckResult verify_factorization(const PairData& P, const MonodromyRep& rep)
{
    CheckResult r{"factorization through B_W0"};
    const CoxeterGroup& G = P.W.group;
    // The condition depends on w only through the coset of w^{-1}; test the shortest w per coset.
    for (int i = 0; i < P.num_simple(); ++i) {
        std::vector<char> seen(rep.cosets.size(), 0);
        for (int w = 0; w < G.size(); ++w) {
            int c = rep.coset_of[G.inverse(w)];
            if (seen[c]) continue;
            seen[c] = 1;
            int t = G.multiply(G.multiply(w, G.generator(i)), G.inverse(w));
            if (rep.w0.member[t] >= 0) continue;
            BraidWord bw = braid_lift(G, w);
            BraidWord b = concat(concat(bw, {{i, 1}, {i, 1}}), braid_inverse(bw));
            ++r.cases;
            for (int x : rep.V0())
                if (apply_braid(rep, b, unit(x)) != unit(x)) {
                    r.fail("sigma_{s,b}^2 is not the identity on V0 for s" + std::to_string(i + 1) + ", b = b_" + word_of(G, w));
                    break;
                }
        }
    }
    if (r.cases == 0) r.detail = "vacuous";
    return r;
}

BraidWord phi_to_W0(const PairData& P, const W0Data& w0, const BraidWord& b)
{
    const CoxeterGroup& G = P.W.group;
    int g = 0, y = 0;
    BraidWord out;
    for (const BraidLetter& l : b) {
        int gs = G.right(g, l.gen);
        int t = G.multiply(gs, G.inverse(g));
        if (w0.member[t] >= 0) {
            int simple = G.multiply(G.multiply(G.inverse(y), t), y);
            auto it = std::find(w0.simple.begin(), w0.simple.end(), simple);
            if (it == w0.simple.end()) throw TheoryViolation("chamber walk crossed a non-simple wall of the W0 chamber");
            out.push_back({int(it - w0.simple.begin()), l.exp});
            y = G.multiply(t, y);
        }
        g = gs;
    }
    if (g != y) throw TheoryViolation("braid word does not lie over W0");
    return free_reduce(out);
}

namespace {

bool unit_triangular(const std::vector<SparseVec>& cols, const std::vector<int>& diag)
{
    for (std::size_t x = 0; x < cols.size(); ++x) {
        if (cols[x].empty()) return false;
        auto [lead, c] = cols[x].back();
        if (lead != diag[x] || (c != 1 && c != -1)) return false;
    }
    return true;
}

Rat det_rational(RatMat A)
{
    const int n = A.rows();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && A(p, c) == Rat(0)) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (int k = 0; k < n; ++k) std::swap(A(p, k), A(c, k));
            det = -det;
        }
        det *= A(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (A(i, c) == Rat(0)) continue;
            Rat f = A(i, c) / A(c, c);
            for (int k = c; k < n; ++k) A(i, k) -= f * A(c, k);
        }
    }
    return det;
}

}  // namespace

V0Report verify_v0_hecke(const PairData& P, const MonodromyRep& rep)
{
    V0Report out;
    CheckResult& r = out.result;
    r.name = "V0 intertwiner";
    const CoxeterGroup& G = P.W.group;
    const W0Data& w0 = rep.w0;

    std::vector<IntVec> w0_normals;
    for (int t : w0.reflections) w0_normals.push_back(P.W.normals[P.W.elem_refl[t]]);
    auto same_w0_chamber = [&](int w) {
        IntVec wl = G.matrix(w) * P.W.chamber_point;
        for (const IntVec& nrm : w0_normals)
            if ((dot(nrm, P.W.chamber_point) > 0) != (dot(nrm, wl) > 0)) return false;
        return true;
    };

    for (std::size_t j = 0; j < w0.simple.size(); ++j) {
        const int t = w0.simple[j];
        bool found = false;
        for (int w = 0; w < G.size() && !found; ++w) {
            if (!same_w0_chamber(w)) continue;
            for (int i = 0; i < P.num_simple() && !found; ++i) {
                if (G.multiply(G.multiply(w, G.generator(i)), G.inverse(w)) != t) continue;
                BraidWord bw = braid_lift(G, w);
                BraidWord sb = free_reduce(concat(concat(bw, {{i, 1}}), braid_inverse(bw)));
                BraidWord image = phi_to_W0(P, w0, sb);
                ++r.cases;
                if (image != BraidWord{{int(j), 1}}) r.fail("conjugated generator for S_chi element " + std::to_string(j + 1) + " maps to the wrong braid generator");
                out.sigma_sb.push_back(sb);
                found = true;
            }
        }
        if (!found) {
            r.fail("no conjugated braid generator found for S_chi element " + std::to_string(j + 1));
            return out;
        }
    }

    HeckeRing H(std::make_shared<CoxeterGroup>(w0.group), w0.params);
    const int m = w0.group.size();
    std::vector<SparseVec> Phi(m);
    for (int x = 0; x < m; ++x) {
        BraidWord b;
        for (int j : w0.group.word(x)) b = concat(b, out.sigma_sb[j]);
        Phi[x] = apply_braid(rep, b, unit(0));
        ++r.cases;
        for (auto [v, c] : Phi[x])
            if (rep.coset_of[v] != 0) {
                r.fail("image of T_" + w0.group.word_string(x, "t") + " leaves V0");
                return out;
            }
    }
    for (std::size_t j = 0; j < w0.simple.size(); ++j)
        for (int x = 0; x < m; ++x) {
            SparseVec lhs = apply_braid(rep, out.sigma_sb[j], Phi[x]);
            std::vector<std::pair<int, Int>> acc;
            for (auto [y, c] : H.gen_left(int(j), HeckeRing::basis(x)))
                for (auto [v, d] : Phi[y]) acc.emplace_back(v, c * d);
            ++r.cases;
            if (lhs != sparse_canonical(std::move(acc)))
                r.fail("intertwining fails for generator " + std::to_string(j + 1) + " at T_" + w0.group.word_string(x, "t"));
        }

    const std::vector<int>& V0 = rep.V0();
    std::map<int, int> pos;
    for (std::size_t k = 0; k < V0.size(); ++k) pos[V0[k]] = int(k);
    out.Phi = IntMat(m, m);
    for (int x = 0; x < m; ++x)
        for (auto [v, c] : Phi[x]) out.Phi(pos[v], x) = c;
    ++r.cases;
    if (!unit_triangular(Phi, w0.embed)) {
        if (m > 200) {
            r.fail("intertwiner matrix is not unitriangular");
        } else {
            Rat d = det_rational(to_rat(out.Phi));
            if (d != Rat(1) && d != Rat(-1)) r.fail("intertwiner matrix is not invertible over Z");
        }
    }

    for (int j = 0; j < P.G.rank; ++j) {
        F2 u = F2(1) << j;
        int expect = rep.chi(u) * P.G.tau_of(u);
        ++r.cases;
        for (int v : V0)
            if (rep.i_action[j][v] != expect) r.fail("I does not act on V0 by chi tau");
    }
    return out;
}

Sl2FixtureReport sl2_fixture_check()
{
    Sl2FixtureReport rep;
    PairData P = build_pair(make_datum("sl2_split", IntMat::from_rows({{2}}), IntMat::from_rows({{-1}})), {}, {});
    auto fail = [&](const std::string& why) {
        if (rep.pass) rep.detail = why;
        rep.pass = false;
    };
    if (P.W.size() != 2 || P.G.rank != 1) {
        fail("unexpected little Weyl group or component group");
        return rep;
    }

    MonodromyRep chi1 = build_lambda(P, Character::from_signs({-1}));
    const IntMat swap = IntMat::from_rows({{0, 1}, {1, 0}});
    if (chi1.lambda[0].to_dense() != swap) fail("lambda for chi_1 is not the swap");
    // B = columns v_1 + v_s, v_1 - v_s
    const RatMat B = to_rat(IntMat::from_rows({{1, 1}, {1, -1}}));
    const RatMat Binv = inverse(B);
    const IntMat Id = IntMat::identity(2);
    for (int eps : {1, -1}) {
        IntMat mu(2, 2);
        for (int w = 0; w < 2; ++w) mu(P.W.group.right(w, 0), w) = eps;
        if (mu * mu != Id) fail("mu^2 != 1 for chi_1");
        if (mu * chi1.lambda[0].to_dense() != chi1.lambda[0].to_dense() * mu) fail("mu does not commute with lambda for chi_1");
        rep.mu_chi1.push_back(to_int(Binv * to_rat(mu) * B));
    }
    if (rep.mu_chi1[0] != IntMat::from_rows({{1, 0}, {0, -1}}) || rep.mu_chi1[1] != IntMat::from_rows({{-1, 0}, {0, 1}}))
        fail("chi_1 monodromy matrices are not diag(1, -1) and diag(-1, 1)");
    for (int v : chi1.i_action[0])
        if (v != -1) fail("I does not act by -1 on the chi_1 module");

    MonodromyRep chi0 = build_lambda(P, Character::from_signs({1}));
    HeckeRing H1 = hecke_chi1(P);
    std::vector<SparseMat> mu0 = build_mu_chi1(P, H1);
    rep.mu_chi0 = mu0[0].to_dense();
    if (rep.mu_chi0 != IntMat::from_rows({{0, -1}, {1, 2}})) fail("chi_0 monodromy is not [[0, -1], [1, 2]]");
    IntMat N = rep.mu_chi0 - Id;
    if (N * N != IntMat(2, 2)) fail("(mu_0 - 1)^2 != 0");
    return rep;
}

}  // namespace symhecke
