#pragma once

#include "symhecke/hecke.hpp"
#include "symhecke/monodromy.hpp"

#include <string>
#include <vector>

namespace symhecke::oracle {

// The module induced from I x B^{chi,0} acting on Z_chi (x) H_{W0} (x) Z_tau, written in the
// basis b_{w_u} (x) T_x with w_u the minimal element of the coset u.
struct InducedModule {
    std::vector<int> coset_rep;                   // per coset
    std::vector<std::pair<int, int>> basis;        // (coset, W0 element)
    std::vector<SparseMat> sigma;                 // per simple reflection
    std::vector<std::vector<int>> i_action;       // per basis vector of I
};

InducedModule induced_module(const PairData& P, const MonodromyRep& rep);

struct InducedComparison {
    CheckResult result;
    bool direct = false;  // matrices coincide under (u, x) <-> v_{w_u x}
};

// Compares the induced module with build_lambda: first entrywise under the basis bijection,
// otherwise through the intertwiner b_{w_u} (x) T_x -> lambda(b_{w_u}) Phi(T_x).
InducedComparison compare_induced(const PairData& P, const MonodromyRep& rep);

// The quotient of the free algebra on the generators by the quadratic and braid relations,
// truncated at word length max_length + 1, compared with the Hecke ring.
CheckResult free_algebra_quotient(const HeckeRing& H);

}  // namespace symhecke::oracle
