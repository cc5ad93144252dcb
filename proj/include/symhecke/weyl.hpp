#pragma once

#include "symhecke/linalg.hpp"
#include "symhecke/root_datum.hpp"

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace symhecke {

using Bitset = std::vector<std::uint64_t>;

inline bool bit_test(const Bitset& b, int i) { return (b[std::size_t(i) >> 6] >> (i & 63)) & 1u; }
inline void bit_set(Bitset& b, int i) { b[std::size_t(i) >> 6] |= std::uint64_t(1) << (i & 63); }

using Word = std::vector<int>;

// A finite group generated by integer reflection matrices, fully enumerated.
// Elements are numbered in canonical order: by length, then by the
// lexicographically least reduced word.
class CoxeterGroup {
public:
    static constexpr std::size_t kDefaultCap = 1000000;

    CoxeterGroup() = default;
    CoxeterGroup(int dim, std::vector<IntMat> generators, std::size_t cap = kDefaultCap);
    CoxeterGroup(const CoxeterGroup& o);
    CoxeterGroup& operator=(const CoxeterGroup& o);

    int size() const { return int(mats_.size()); }
    int num_generators() const { return int(gens_.size()); }
    int dim() const { return dim_; }
    const IntMat& matrix(int w) const { return mats_[w]; }
    const Word& word(int w) const { return words_[w]; }
    int length(int w) const { return lengths_[w]; }
    int max_length() const { return lengths_.empty() ? 0 : lengths_.back(); }
    int generator(int i) const { return gen_elems_[i]; }
    int left(int s, int w) const { return left_[std::size_t(s) * size() + w]; }
    int right(int w, int s) const { return right_[std::size_t(w) * num_generators() + s]; }
    int inverse(int w) const { return inv_[w]; }
    int find(const IntMat& m) const;
    int multiply(int a, int b) const;
    int from_word(const Word& w) const;
    int order_of(int w) const;
    bool is_reflection(int w) const;
    std::string word_string(int w, const std::string& letter = "s") const;

    // Full multiplication table, row-major table[a * size + b] = a*b.
    const std::vector<int>& cayley() const;
    // Bruhat order: bruhat_leq(a, b) iff a <= b.
    bool bruhat_leq(int a, int b) const;
    const std::vector<Bitset>& bruhat_rows() const;

    // Lexicographically greatest reduced word (used for Matsumoto checks).
    Word max_reduced_word(int w) const;

private:
    int dim_ = 0;
    std::vector<IntMat> gens_;
    std::vector<IntMat> mats_;
    std::vector<Word> words_;
    std::vector<int> lengths_, left_, right_, inv_, gen_elems_;
    std::vector<std::pair<IntMat, int>> lookup_;
    mutable std::once_flag cayley_once_, bruhat_once_;
    mutable std::vector<int> cayley_;
    mutable std::vector<Bitset> bruhat_;
};

struct BraidLetter {
    int gen;
    int exp;  // +1 or -1
    bool operator==(const BraidLetter& o) const { return gen == o.gen && exp == o.exp; }
};
using BraidWord = std::vector<BraidLetter>;

BraidWord free_reduce(const BraidWord& b);
BraidWord braid_inverse(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);

// The little Weyl group acting on X_*(A) coordinates.
struct WeylGroup {
    CoxeterGroup group;
    IntMat gram;
    IntVec chamber_point;
    std::vector<int> simple;                 // reflection indices (into RestrictedSystem) of S, in order
    std::vector<int> refl_elem;              // reflection index -> element index
    std::vector<int> elem_refl;              // element index -> reflection index or -1
    std::vector<IntVec> normals;             // per reflection index
    std::vector<int> deltas;                 // per reflection index

    int size() const { return group.size(); }
    int rank() const { return group.dim(); }
    int delta_of_element(int w) const { return deltas.at(elem_refl.at(w)); }
    int simple_elem(int i) const { return group.generator(i); }
    // Number of hyperplanes separating x and y (neither on a hyperplane).
    int separating(const IntVec& x, const IntVec& y) const;
};

WeylGroup build_weyl(const RestrictedSystem& rs, std::size_t cap = CoxeterGroup::kDefaultCap);

bool bruhat_leq(const WeylGroup& W, int w1, int w2);
BraidWord braid_lift(const CoxeterGroup& G, int w);
inline BraidWord braid_lift(const WeylGroup& W, int w) { return braid_lift(W.group, w); }

struct BruhatValueReport {
    int trials = 0;
    int passes = 0;
    int failures = 0;
    long long comparisons = 0;
    std::string witness;
};

BruhatValueReport check_bruhat_values(const WeylGroup& W, int trials, std::uint64_t seed);
BruhatValueReport check_bruhat_values_serial(const WeylGroup& W, int trials, std::uint64_t seed);

// Simple reflections (element indices) of the subgroup generated by refl_subset whose
// chamber contains the fixed chamber of W. Sorted by element index.
std::vector<int> simple_system_of_subgroup(const WeylGroup& W, const std::vector<int>& refl_subset);

// Degrees read off from the Poincare polynomial; empty if it does not factor.
std::vector<int> degrees(const CoxeterGroup& G);

}  // namespace symhecke
