#pragma once

#include "symhecke/component_group.hpp"
#include "symhecke/hecke.hpp"
#include "symhecke/root_datum.hpp"
#include "symhecke/sparse.hpp"
#include "symhecke/weyl.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symhecke {

// Everything derived from one catalog pair.
struct PairData {
    RootDatum datum;
    RestrictedSystem rs;
    WeylGroup W;
    ComponentGroup G;
    std::shared_ptr<const CoxeterGroup> Wptr;

    int delta(int i) const { return W.deltas[W.simple[i]]; }
    int num_simple() const { return W.group.num_generators(); }
};

PairData build_pair(RootDatum datum, const std::vector<std::vector<int>>& kernel_N, const std::vector<int>& tau);

struct MonodromyRep {
    Character chi;
    W0Data w0;
    std::vector<SparseMat> lambda;       // per simple reflection
    std::vector<SparseMat> lambda_inv;
    std::vector<std::vector<int>> i_action;  // per basis vector of I: diagonal entries
    std::vector<int> coset_of;           // element -> index of its coset in cosets
    std::vector<std::vector<int>> cosets;  // sorted element lists; cosets[0] is W0
    std::vector<int> coset_rep;          // minimal element of each coset
    std::optional<std::vector<SparseMat>> mu;

    int dim() const { return int(coset_of.size()); }
    const std::vector<int>& V0() const { return cosets[0]; }
};

MonodromyRep build_lambda(const PairData& P, const Character& chi);

HeckeRing hecke_chi1(const PairData& P);
std::vector<SparseMat> build_mu_chi1(const PairData& P, const HeckeRing& H1);
std::vector<SparseMat> mu_closed_form(const PairData& P);

// lambda of a braid word applied to a vector (letters act right to left).
SparseVec apply_braid(const MonodromyRep& rep, const BraidWord& b, SparseVec v);
SparseMat braid_matrix(const MonodromyRep& rep, const BraidWord& b);

struct CheckResult {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string detail;
    long long cases = 0;

    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    void fail(const std::string& why)
    {
        if (pass) detail = why;
        pass = false;
    }
};

CheckResult check_braid_relations(const CoxeterGroup& G, const std::vector<SparseMat>& gens, const std::string& name);
// (X - 1)(X + q) = 0 for every generator matrix X.
CheckResult check_quadratic(const std::vector<SparseMat>& gens, const std::vector<int>& q, const std::string& name);
CheckResult check_block_relations(const PairData& P, const MonodromyRep& rep);
CheckResult check_block_permutation(const PairData& P, const MonodromyRep& rep);
CheckResult check_semidirect(const PairData& P, const MonodromyRep& rep);
CheckResult check_matsumoto(const PairData& P, const MonodromyRep& rep, int max_elements);
CheckResult quadratic_relation_check(const PairData& P, const MonodromyRep& rep);
CheckResult check_mu_chi1(const PairData& P, const MonodromyRep& rep, const HeckeRing& H1);
CheckResult fundamental_class_check(const PairData& P, const MonodromyRep& rep);
CheckResult check_cyclicity(const PairData& P, const MonodromyRep& rep);
CheckResult verify_factorization(const PairData& P, const MonodromyRep& rep);

// Chamber walk image in B_{W0} of a braid word whose image in W lies in W0.
BraidWord phi_to_W0(const PairData& P, const W0Data& w0, const BraidWord& b);

struct V0Report {
    CheckResult result;
    std::vector<BraidWord> sigma_sb;  // conjugated generators b sigma_s b^{-1}, one per element of S_chi
    IntMat Phi;                       // columns: images of T_x in the V0 basis
};
V0Report verify_v0_hecke(const PairData& P, const MonodromyRep& rep);

struct Sl2FixtureReport {
    bool pass = true;
    std::vector<IntMat> mu_chi1;  // in the basis v_1 + v_s, v_1 - v_s, both sign conventions
    IntMat mu_chi0;
    std::string detail;
};
Sl2FixtureReport sl2_fixture_check();

}  // namespace symhecke
