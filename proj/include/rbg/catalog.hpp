#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rbg/group.hpp"

namespace rbg {

// Permutation of {1..d} stored 0-based: p[i] is the image of point i.
using Perm = std::vector<int>;

// Products of permutations are read left to right: (p * q) applies p first.
Perm perm_mul(const Perm& p, const Perm& q);
Perm parse_cycles(std::string_view s, int degree);  // "(1,2,3)(4,5)" or "e"
std::string cycle_notation(const Perm& p);          // "e" for the identity

// Closure of the generators. Elements are ordered by (element order, cycle
// notation) with the identity first, and labelled in cycle notation.
FiniteGroup permutation_group(const std::vector<Perm>& gens, int degree);

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);   // order 2n, <(1,...,n), (1,n)(2,n-1)...> on n points
FiniteGroup symmetric(int n);  // n <= 5
FiniteGroup quaternion8();     // <(1,2,3,4)(5,6,7,8), (1,5,3,7)(2,8,4,6)>

// Descriptors: Z<n>, D<n>, S<n>, Q8, K4 (= Z2xZ2), products joined by 'x'
// (e.g. "Z2xS3"), or a path to a Cayley-table JSON file.
FiniteGroup make_group(std::string_view descriptor, const Limits& limits = {});

}  // namespace rbg
