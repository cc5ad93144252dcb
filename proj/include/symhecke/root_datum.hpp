#pragma once

#include "symhecke/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symhecke {

// Raised for malformed or inconsistent input data (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computed object violates a structural identity that must hold.
class TheoryViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RootClass { Real, Imaginary, Complex };

const char* to_string(RootClass c);

// Simply connected root datum: X_*(T) has the simple coroots as basis and X^*(T)
// the fundamental weights, so the pairing is the dot product of coordinate vectors.
// cartan(i, j) = <alpha_j, coroot_i>; theta acts on X_*(T) by x -> theta * x.
struct RootDatum {
    std::string name;
    int rank_T = 0;
    IntMat cartan;
    IntMat theta;
    std::vector<IntVec> simple_roots;
    std::vector<IntVec> roots;         // weight coordinates; positive roots (by height) first
    std::vector<IntVec> coroots;       // coroot coordinates, aligned with roots
    std::vector<IntVec> root_coeffs;   // coordinates in the simple roots
    int num_positive = 0;
    std::vector<int> theta_perm;       // index of theta(alpha)
    std::map<IntVec, int> index;

    int find_root(const IntVec& alpha) const;
    IntVec theta_root(const IntVec& alpha) const;
    IntVec theta_cochar(const IntVec& x) const;
    static Int pairing(const IntVec& lambda, const IntVec& x) { return dot(lambda, x); }
};

RootDatum make_datum(const std::string& name, const IntMat& cartan, const IntMat& theta);
RootDatum load_datum(const std::string& json_text);

RootClass classify_root(const RootDatum& d, const IntVec& alpha);

struct ReflectionData {
    IntVec normal;               // primitive functional on X_*(A), positive on the chamber
    IntMat matrix;               // action on X_*(A) coordinates
    int delta = 0;
    std::vector<int> phi_s;      // root indices with restriction on this line
    int real_root = -1;          // positive real root when delta == 1
    bool has_real = false;       // some real root restricts onto this line
};

struct RestrictedSystem {
    int rank_A = 0;
    bool rank_zero = false;
    IntMat lattice_A;                     // rows: basis of X_*(A) inside X_*(T)
    std::vector<RootClass> root_class;    // per root of the datum
    std::vector<IntVec> restriction;      // per root: functional on X_*(A) coordinates
    std::vector<int> sigma_of_root;       // -1 for imaginary roots
    std::vector<IntVec> sigma;            // distinct restricted roots
    std::vector<int> multiplicity;
    IntMat gram;                          // invariant form on X_*(A) coordinates
    IntVec chamber_point;                 // generic point of the chamber, X_*(A) coordinates
    std::vector<bool> positive;           // global positive system on roots
    std::vector<ReflectionData> reflections;
    int n_real = 0, n_imaginary = 0, n_complex = 0;

    // Coordinates of x in X_*(T) with theta(x) = -x against lattice_A.
    IntVec coords_in_A(const IntVec& x) const;
    // Index of the reflection whose hyperplane is the kernel of f, or -1.
    int reflection_of(const IntVec& f) const;
};

RestrictedSystem build_restricted(const RootDatum& d);

std::string root_name(const RootDatum& d, int idx);

}  // namespace symhecke
