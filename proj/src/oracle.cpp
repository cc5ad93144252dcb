#include "symhecke/oracle.hpp"

#include <algorithm>
#include <map>

namespace symhecke::oracle {

InducedModule induced_module(const PairData& P, const MonodromyRep& rep)
{
    const CoxeterGroup& G = P.W.group;
    const W0Data& w0 = rep.w0;
    const int m = w0.group.size();
    InducedModule M;
    M.coset_rep = rep.coset_rep;
    for (std::size_t u = 0; u < rep.cosets.size(); ++u)
        for (int x = 0; x < m; ++x) M.basis.emplace_back(int(u), x);
    const int n = int(M.basis.size());

    HeckeRing H(std::make_shared<CoxeterGroup>(w0.group), w0.params);
    for (int i = 0; i < P.num_simple(); ++i) {
        SparseMat S;
        S.n = n;
        S.cols.resize(n);
        for (std::size_t u = 0; u < rep.cosets.size(); ++u) {
            int wu = rep.coset_rep[u];
            int u2 = rep.coset_of[G.left(i, wu)];
            int w2 = rep.coset_rep[u2];
            BraidWord c = free_reduce(concat(concat(braid_inverse(braid_lift(G, w2)), {{i, 1}}), braid_lift(G, wu)));
            HeckeRing::Elem h = H.eta(phi_to_W0(P, w0, c));
            for (int x = 0; x < m; ++x) {
                std::vector<std::pair<int, Int>> col;
                for (auto [y, coef] : H.multiply(h, HeckeRing::basis(x))) col.emplace_back(u2 * m + y, coef);
                S.cols[u * m + x] = sparse_canonical(std::move(col));
            }
        }
        M.sigma.push_back(std::move(S));
    }
    for (int j = 0; j < P.G.rank; ++j) {
        F2 gen = F2(1) << j;
        std::vector<int> diag;
        for (auto [u, x] : M.basis) diag.push_back(rep.chi(P.G.act(G.inverse(M.coset_rep[u]), gen)) * P.G.tau_of(gen));
        M.i_action.push_back(std::move(diag));
    }
    return M;
}

InducedComparison compare_induced(const PairData& P, const MonodromyRep& rep)
{
    InducedComparison out;
    CheckResult& r = out.result;
    r.name = "induced-module oracle";
    const CoxeterGroup& G = P.W.group;
    InducedModule M = induced_module(P, rep);
    const int n = int(M.basis.size());
    if (n != rep.dim()) {
        r.fail("induced module has rank " + std::to_string(n));
        return out;
    }

    std::vector<int> label(n);
    for (int k = 0; k < n; ++k) label[k] = G.multiply(M.coset_rep[M.basis[k].first], rep.w0.embed[M.basis[k].second]);
    bool direct = true;
    for (std::size_t i = 0; i < M.sigma.size() && direct; ++i)
        for (int k = 0; k < n && direct; ++k) {
            std::vector<std::pair<int, Int>> col;
            for (auto [c, v] : M.sigma[i].cols[k]) col.emplace_back(label[c], v);
            direct = sparse_canonical(std::move(col)) == rep.lambda[i].cols[label[k]];
        }
    for (std::size_t j = 0; j < M.i_action.size() && direct; ++j)
        for (int k = 0; k < n && direct; ++k) direct = M.i_action[j][k] == rep.i_action[j][label[k]];
    out.direct = direct;
    r.cases = n;
    if (direct) {
        r.detail = "entrywise equal under (u, x) -> v_{w_u x}";
        return out;
    }

    // Intertwiner Psi(u, x) = lambda(b_{w_u}) Phi(T_x).
    V0Report v0 = verify_v0_hecke(P, rep);
    if (!v0.result.pass) {
        r.fail("V0 intertwiner unavailable: " + v0.result.detail);
        return out;
    }
    const int m = rep.w0.group.size();
    std::vector<SparseVec> Phi(m), Psi(n);
    for (int x = 0; x < m; ++x) {
        BraidWord b;
        for (int j : rep.w0.group.word(x)) b = concat(b, v0.sigma_sb[j]);
        Phi[x] = apply_braid(rep, b, {{0, 1}});
    }
    for (int k = 0; k < n; ++k) Psi[k] = apply_braid(rep, braid_lift(G, M.coset_rep[M.basis[k].first]), Phi[M.basis[k].second]);
    for (std::size_t i = 0; i < M.sigma.size(); ++i)
        for (int k = 0; k < n; ++k) {
            std::vector<std::pair<int, Int>> rhs;
            for (auto [c, v] : M.sigma[i].cols[k])
                for (auto [e, d] : Psi[c]) rhs.emplace_back(e, v * d);
            if (rep.lambda[i].apply(Psi[k]) != sparse_canonical(std::move(rhs))) {
                r.fail("intertwiner fails for s" + std::to_string(i + 1));
                return out;
            }
        }
    for (std::size_t j = 0; j < M.i_action.size(); ++j)
        for (int k = 0; k < n; ++k)
            for (auto [e, d] : Psi[k])
                if (rep.i_action[j][e] != M.i_action[j][k]) {
                    r.fail("intertwiner fails for the I action on u" + std::to_string(j + 1));
                    return out;
                }
    std::vector<std::vector<std::pair<int, Int>>> rows(Psi.begin(), Psi.end());
    if (rank_mod_p(rows, n, 2147483647) != n) r.fail("intertwiner is singular");
    if (r.pass) r.detail = "equal up to the intertwiner b_{w_u} (x) T_x -> lambda(b_{w_u}) Phi(T_x)";
    return out;
}

namespace {

using Row = std::map<int, Rat, std::greater<int>>;  // leading (largest) column first

bool deglex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

CheckResult free_algebra_quotient(const HeckeRing& H)
{
    CheckResult r("free-algebra quotient");
    const CoxeterGroup& G = H.group();
    const int k = G.num_generators();
    const int N = G.max_length() + 1;

    std::vector<Word> words{Word{}};
    for (std::size_t start = 0; k > 0 && words.back().size() < std::size_t(N);) {
        std::size_t end = words.size();
        for (std::size_t a = start; a < end; ++a)
            for (int s = 0; s < k; ++s) {
                Word w = words[a];
                w.push_back(s);
                words.push_back(std::move(w));
            }
        start = end;
    }
    std::sort(words.begin(), words.end(), deglex_less);
    std::map<Word, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);

    struct Relation {
        std::vector<std::pair<Word, Int>> terms;
        std::size_t length;
    };
    std::vector<Relation> relations;
    for (int s = 0; s < k; ++s) {
        const Int q = H.params()[s];
        relations.push_back({{{Word{s, s}, 1}, {Word{s}, -(1 - q)}, {Word{}, -q}}, 2});
    }
    for (int s = 0; s < k; ++s)
        for (int t = s + 1; t < k; ++t) {
            int m = G.order_of(G.multiply(G.generator(s), G.generator(t)));
            Word a, b;
            for (int j = 0; j < m; ++j) {
                a.push_back(j % 2 ? t : s);
                b.push_back(j % 2 ? s : t);
            }
            relations.push_back({{{a, 1}, {b, -1}}, std::size_t(m)});
        }

    std::map<int, Row> pivots;
    auto reduce = [&](Row row, bool full) {
        for (auto it = row.begin(); it != row.end();) {
            if (it->second == Rat(0)) {
                it = row.erase(it);
                continue;
            }
            auto p = pivots.find(it->first);
            if (p == pivots.end()) {
                if (!full) break;
                ++it;
                continue;
            }
            Rat f = it->second / p->second.begin()->second;
            for (auto [c, v] : p->second) row[c] -= f * v;
            it = row.begin();
        }
        for (auto it = row.begin(); it != row.end();) it = it->second == Rat(0) ? row.erase(it) : std::next(it);
        return row;
    };

    for (const Relation& rel : relations)
        for (const Word& u : words) {
            if (u.size() + rel.length > std::size_t(N)) break;
            for (const Word& v : words) {
                if (u.size() + rel.length + v.size() > std::size_t(N)) break;
                Row row;
                for (const auto& [w, c] : rel.terms) {
                    Word full = u;
                    full.insert(full.end(), w.begin(), w.end());
                    full.insert(full.end(), v.begin(), v.end());
                    row[index.at(full)] += Rat(c);
                }
                row = reduce(std::move(row), false);
                if (!row.empty()) pivots.emplace(row.begin()->first, std::move(row));
            }
        }

    const int dim = int(words.size() - pivots.size());
    ++r.cases;
    if (dim != G.size()) {
        r.fail("quotient has rank " + std::to_string(dim) + ", expected " + std::to_string(G.size()));
        return r;
    }
    std::map<int, int> elem_of_word;
    for (int w = 0; w < G.size(); ++w) {
        int idx = index.at(G.word(w));
        ++r.cases;
        if (pivots.count(idx)) {
            r.fail("canonical word of " + G.word_string(w) + " is not a standard monomial");
            return r;
        }
        elem_of_word[idx] = w;
    }

    auto normal_form = [&](const Word& w) {
        Row row;
        row[index.at(w)] = Rat(1);
        HeckeRing::Elem e;
        for (auto [c, v] : reduce(std::move(row), true)) {
            if (v.denominator() != 1) throw TheoryViolation("non-integral structure constant in the quotient");
            e[elem_of_word.at(c)] = v.numerator();
        }
        return e;
    };

    for (int x = 0; x < G.size(); ++x)
        for (int y = 0; y < G.size(); ++y) {
            if (G.length(x) + G.length(y) > N) continue;
            Word w = G.word(x);
            w.insert(w.end(), G.word(y).begin(), G.word(y).end());
            ++r.cases;
            if (normal_form(w) != H.basis_product(x, y)) {
                r.fail("T_" + G.word_string(x) + " T_" + G.word_string(y) + " differs from the quotient");
                return r;
            }
        }
    r.detail = "rank " + std::to_string(dim) + ", " + std::to_string(words.size()) + " words";
    return r;
}

}  // namespace symhecke::oracle
