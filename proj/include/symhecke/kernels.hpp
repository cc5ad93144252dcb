#pragma once

#include "symhecke/weyl.hpp"

#include <vector>

namespace symhecke::kernels {

// Multiplication table table[a * n + b] = a*b, built from right multiplication by generators.
std::vector<int> cayley_serial(const CoxeterGroup& G);
std::vector<int> cayley_parallel(const CoxeterGroup& G);

// rows[b] is the set of a with a <= b, via subword closure of the canonical word of b.
std::vector<Bitset> bruhat_serial(const CoxeterGroup& G);
std::vector<Bitset> bruhat_parallel(const CoxeterGroup& G);

}  // namespace symhecke::kernels
