#pragma once

#include "symhecke/root_datum.hpp"
#include "symhecke/weyl.hpp"

#include <cstdint>
#include <vector>

namespace symhecke {

using F2 = std::uint32_t;  // F_2-vector as a bit mask

// A character of I, given by its values on the basis of I.
struct Character {
    std::vector<int> signs;  // +1 / -1 per basis vector of I
    F2 mask = 0;             // bit i set iff signs[i] == -1

    static Character from_signs(const std::vector<int>& s);
    static Character from_mask(F2 m, int rank);
    int operator()(F2 u) const { return (__builtin_popcount(mask & u) & 1) ? -1 : 1; }
    bool trivial() const { return mask == 0; }
    bool operator==(const Character& o) const { return mask == o.mask && signs.size() == o.signs.size(); }
};

// I = A[2]/N with A[2] = X_*(A)/2X_*(A), written in the coordinates of lattice_A.
class ComponentGroup {
public:
    int ambient_dim = 0;
    std::vector<F2> kernel_rows;       // reduced echelon basis of N
    std::vector<int> kernel_pivots;
    std::vector<int> basis_cols;       // ambient coordinates whose classes form the basis of I
    int rank = 0;
    std::vector<std::vector<F2>> action;  // per W element: images of ambient basis vectors
    std::vector<F2> I0_basis;          // in I coordinates
    std::vector<int> tau;              // +1 / -1 on the basis of I
    std::vector<F2> I_s;               // per reflection index: generator of I_s (0 if trivial)
    std::vector<F2> cocycle;           // per reflection index: r(sigma_s^2)

    F2 reduce(F2 ambient) const;       // ambient mask -> I coordinates
    F2 lift(F2 u) const;               // I coordinates -> ambient representative
    F2 act_ambient(int w, F2 x) const;
    F2 act(int w, F2 u) const;         // action of W element on I
    int tau_of(F2 u) const;
    bool in_I0(F2 u) const;
    std::vector<Character> characters() const;
    Character act_character(const WeylGroup& W, int w, const Character& chi) const;
    F2 coroot_class(const RootDatum& d, const RestrictedSystem& rs, int root) const;
};

ComponentGroup build_component_group(const RootDatum& d, const RestrictedSystem& rs, const WeylGroup& W,
                                     const std::vector<std::vector<int>>& kernel_N, const std::vector<int>& tau);

std::vector<int> stabilizer(const WeylGroup& W, const ComponentGroup& G, const Character& chi);

struct W0Data {
    std::vector<int> reflections;  // element indices of the reflections in W0
    std::vector<int> elements;     // element indices of W0, sorted
    std::vector<int> simple;       // element indices of S_chi, sorted
    std::vector<int> params;       // q_i = (-1)^delta per simple reflection
    std::vector<int> deltas;       // delta per simple reflection
    CoxeterGroup group;            // W0 with generators S_chi
    std::vector<int> embed;        // W0 element -> W element
    std::vector<int> member;       // W element -> W0 element or -1
    int order() const { return int(elements.size()); }
};

W0Data coxeter_sub_W0(const WeylGroup& W, const RestrictedSystem& rs, const ComponentGroup& G, const Character& chi);

bool membership_criterion(const ComponentGroup& G, int refl_index, const Character& chi);
int splitting_cocycle(const WeylGroup& W, const ComponentGroup& G, int simple_index, const Character& chi);

}  // namespace symhecke
