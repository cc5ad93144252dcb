#pragma once

#include "symhecke/sparse.hpp"
#include "symhecke/weyl.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace symhecke {

// Hecke ring over Z of a finite Coxeter group with parameters q_i = +-1:
// (T_i - 1)(T_i + q_i) = 0 and the braid relations.
class HeckeRing {
public:
    using Elem = std::map<int, Int>;  // T_w coefficient by element index, no zeros

    HeckeRing(std::shared_ptr<const CoxeterGroup> group, std::vector<int> params);

    const CoxeterGroup& group() const { return *group_; }
    const std::vector<int>& params() const { return params_; }
    int rank() const { return group_->size(); }

    static Elem basis(int w) { return {{w, 1}}; }
    Elem one() const { return basis(0); }

    Elem add(const Elem& a, const Elem& b, Int k = 1) const;
    Elem scale(const Elem& a, Int k) const;
    Elem gen_left(int s, const Elem& x) const;   // T_s x
    Elem gen_right(const Elem& x, int s) const;  // x T_s
    Elem basis_product(int x, int y) const;      // T_x T_y, memoized
    Elem multiply(const Elem& x, const Elem& y) const;
    Elem gen_inverse(int s) const;               // T_s^{-1} = q (T_s - (1 - q))
    Elem eta(const BraidWord& b) const;

    SparseMat left_matrix(int s) const;
    SparseMat right_matrix(int s) const;
    SparseMat left_matrix(const Elem& h) const;

    // Generator-scaling map T_i -> c_i T_i extended multiplicatively along reduced words.
    Elem scale_generators(const Elem& x, const std::vector<int>& c) const;
    // True iff T_i -> c_i T_i preserves the quadratic and braid relations.
    bool generator_scaling_is_ring_map(const std::vector<int>& c) const;

private:
    std::shared_ptr<const CoxeterGroup> group_;
    std::vector<int> params_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::unordered_map<long long, Elem> memo_;
};

// The involution omega: T_i -> (-1)^(delta_i + 1) T_i.
std::vector<int> omega_scalars(const std::vector<int>& deltas);
HeckeRing::Elem omega(const HeckeRing& H, const std::vector<int>& deltas, const HeckeRing::Elem& x);

struct RegularReps {
    std::vector<SparseMat> L, R;
};
RegularReps regular_reps(const HeckeRing& H);

}  // namespace symhecke
