#include "symhecke/component_group.hpp"

#include <algorithm>

namespace symhecke {

Character Character::from_signs(const std::vector<int>& s)
{
    Character c;
    c.signs = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 1 && s[i] != -1) throw InputError("character values must be +1 or -1");
        if (s[i] == -1) c.mask |= F2(1) << i;
    }
    return c;
}

Character Character::from_mask(F2 m, int rank)
{
    Character c;
    c.mask = m;
    for (int i = 0; i < rank; ++i) c.signs.push_back((m >> i) & 1 ? -1 : 1);
    return c;
}

F2 ComponentGroup::reduce(F2 x) const
{
    for (std::size_t k = 0; k < kernel_rows.size(); ++k)
        if ((x >> kernel_pivots[k]) & 1) x ^= kernel_rows[k];
    F2 u = 0;
    for (int i = 0; i < rank; ++i)
        if ((x >> basis_cols[i]) & 1) u |= F2(1) << i;
    return u;
}

F2 ComponentGroup::lift(F2 u) const
{
    F2 x = 0;
    for (int i = 0; i < rank; ++i)
        if ((u >> i) & 1) x |= F2(1) << basis_cols[i];
    return x;
}

F2 ComponentGroup::act_ambient(int w, F2 x) const
{
    F2 y = 0;
    for (int j = 0; j < ambient_dim; ++j)
        if ((x >> j) & 1) y ^= action[w][j];
    return y;
}

F2 ComponentGroup::act(int w, F2 u) const { return reduce(act_ambient(w, lift(u))); }

int ComponentGroup::tau_of(F2 u) const
{
    int v = 1;
    for (int i = 0; i < rank; ++i)
        if ((u >> i) & 1) v *= tau[i];
    return v;
}

namespace {

// Insert v into an F2 echelon basis keyed by highest set bit; returns false if dependent.
bool insert_echelon(std::vector<F2>& basis, F2 v)
{
    for (F2 b : basis)
        if (v & (F2(1) << (31 - __builtin_clz(b)))) v ^= b;
    if (!v) return false;
    for (F2& b : basis)
        if (b & (F2(1) << (31 - __builtin_clz(v)))) b ^= v;
    basis.push_back(v);
    return true;
}

}  // namespace

bool ComponentGroup::in_I0(F2 u) const
{
    std::vector<F2> b = I0_basis;
    return !insert_echelon(b, u);
}

std::vector<Character> ComponentGroup::characters() const
{
    std::vector<Character> out;
    for (F2 k = 0; k < (F2(1) << rank); ++k) {
        F2 m = 0;
        for (int i = 0; i < rank; ++i)
            if ((k >> (rank - 1 - i)) & 1) m |= F2(1) << i;
        out.push_back(Character::from_mask(m, rank));
    }
    return out;
}

Character ComponentGroup::act_character(const WeylGroup& W, int w, const Character& chi) const
{
    int winv = W.group.inverse(w);
    F2 m = 0;
    for (int i = 0; i < rank; ++i)
        if (chi(act(winv, F2(1) << i)) == -1) m |= F2(1) << i;
    return Character::from_mask(m, rank);
}

F2 ComponentGroup::coroot_class(const RootDatum& d, const RestrictedSystem& rs, int root) const
{
    IntVec c = rs.coords_in_A(d.coroots[root]);
    F2 x = 0;
    for (int j = 0; j < ambient_dim; ++j)
        if (c[j] & 1) x |= F2(1) << j;
    return reduce(x);
}

ComponentGroup build_component_group(const RootDatum& d, const RestrictedSystem& rs, const WeylGroup& W,
                                     const std::vector<std::vector<int>>& kernel_N, const std::vector<int>& tau)
{
    ComponentGroup G;
    G.ambient_dim = rs.rank_A;
    if (G.ambient_dim > 31) throw InputError("rank of X_*(A) exceeds 31");
    std::vector<F2> rows;
    for (const auto& v : kernel_N) {
        if (int(v.size()) != G.ambient_dim)
            throw InputError("kernel_N_mod2 vectors must have length " + std::to_string(G.ambient_dim) + " (rank of X_*(A))");
        F2 m = 0;
        for (int j = 0; j < G.ambient_dim; ++j) {
            if (v[j] != 0 && v[j] != 1) throw InputError("kernel_N_mod2 entries must be 0 or 1");
            if (v[j]) m |= F2(1) << j;
        }
        rows.push_back(m);
    }
    // reduced echelon form, pivot = lowest column index
    int r = 0;
    for (int c = 0; c < G.ambient_dim; ++c) {
        int p = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if ((rows[i] >> c) & 1) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int i = 0; i < int(rows.size()); ++i)
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        G.kernel_rows.push_back(rows[r]);
        G.kernel_pivots.push_back(c);
        ++r;
    }
    for (int c = 0; c < G.ambient_dim; ++c)
        if (std::find(G.kernel_pivots.begin(), G.kernel_pivots.end(), c) == G.kernel_pivots.end()) G.basis_cols.push_back(c);
    G.rank = int(G.basis_cols.size());

    const CoxeterGroup& Wg = W.group;
    G.action.resize(Wg.size());
    for (int w = 0; w < Wg.size(); ++w) {
        const IntMat& M = Wg.matrix(w);
        for (int j = 0; j < G.ambient_dim; ++j) {
            F2 col = 0;
            for (int i = 0; i < G.ambient_dim; ++i)
                if (M(i, j) & 1) col |= F2(1) << i;
            G.action[w].push_back(col);
        }
    }
    for (int s = 0; s < Wg.num_generators(); ++s)
        for (F2 n : G.kernel_rows)
            if (G.reduce(G.act_ambient(Wg.generator(s), n)) != 0)
                throw InputError("kernel_N_mod2 is not stable under the little Weyl group");

    for (std::size_t a = 0; a < d.roots.size(); ++a)
        if (rs.root_class[a] == RootClass::Real) insert_echelon(G.I0_basis, G.coroot_class(d, rs, int(a)));
    std::sort(G.I0_basis.begin(), G.I0_basis.end());

    if (tau.empty()) {
        G.tau.assign(G.rank, 1);
    } else {
        if (int(tau.size()) != G.rank) throw InputError("tau_on_I_gens must have length " + std::to_string(G.rank) + " (rank of I)");
        for (int t : tau)
            if (t != 1 && t != -1) throw InputError("tau_on_I_gens entries must be +1 or -1");
        G.tau = tau;
    }
    for (F2 u : G.I0_basis)
        if (G.tau_of(u) != 1) throw InputError("tau is not trivial on I0");
    for (int s = 0; s < Wg.num_generators(); ++s)
        for (int i = 0; i < G.rank; ++i)
            if (G.tau_of(G.act(Wg.generator(s), F2(1) << i)) != G.tau_of(F2(1) << i))
                throw InputError("tau is not invariant under the little Weyl group");

    for (const ReflectionData& refl : rs.reflections) {
        F2 u = refl.delta == 1 ? G.coroot_class(d, rs, refl.real_root) : 0;
        G.I_s.push_back(u);
        G.cocycle.push_back(u);
    }
    return G;
}

std::vector<int> stabilizer(const WeylGroup& W, const ComponentGroup& G, const Character& chi)
{
    std::vector<int> out;
    for (int w = 0; w < W.size(); ++w)
        if (G.act_character(W, w, chi) == chi) out.push_back(w);
    return out;
}

bool membership_criterion(const ComponentGroup& G, int refl_index, const Character& chi) { return chi(G.I_s.at(refl_index)) == 1; }

int splitting_cocycle(const WeylGroup& W, const ComponentGroup& G, int simple_index, const Character& chi)
{
    return chi(G.cocycle.at(W.simple.at(simple_index)));
}

W0Data coxeter_sub_W0(const WeylGroup& W, const RestrictedSystem& rs, const ComponentGroup& G, const Character& chi)
{
    W0Data D;
    const CoxeterGroup& Wg = W.group;
    for (std::size_t r = 0; r < rs.reflections.size(); ++r) {
        int delta = rs.reflections[r].delta;
        if (delta > 1 || chi(G.I_s[r]) == 1) D.reflections.push_back(W.refl_elem[r]);
    }
    std::sort(D.reflections.begin(), D.reflections.end());
    D.simple = simple_system_of_subgroup(W, D.reflections);
    std::vector<IntMat> gens;
    for (int t : D.simple) {
        gens.push_back(Wg.matrix(t));
        int delta = W.delta_of_element(t);
        D.deltas.push_back(delta);
        D.params.push_back(delta % 2 ? -1 : 1);
    }
    D.group = CoxeterGroup(Wg.dim(), gens);
    D.member.assign(Wg.size(), -1);
    for (int x = 0; x < D.group.size(); ++x) {
        int w = Wg.find(D.group.matrix(x));
        if (w < 0) throw TheoryViolation("W0 element outside the little Weyl group");
        D.embed.push_back(w);
        D.member[w] = x;
        D.elements.push_back(w);
    }
    std::sort(D.elements.begin(), D.elements.end());
    for (int w : D.elements)
        if (!(G.act_character(W, w, chi) == chi)) throw TheoryViolation("W0 is not contained in the stabilizer of chi");
    for (std::size_t i = 0; i < D.simple.size(); ++i)
        for (std::size_t j = i + 1; j < D.simple.size(); ++j) {
            int m = Wg.order_of(Wg.multiply(D.simple[i], D.simple[j]));
            if (m % 2 == 1 && D.params[i] != D.params[j])
                throw TheoryViolation("parameter inconsistency between conjugate simple reflections of W0");
        }
    return D;
}

}  // namespace symhecke
