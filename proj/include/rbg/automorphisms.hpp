#pragma once

#include <optional>
#include <vector>

#include "rbg/group.hpp"

namespace rbg {

// A group of automorphisms of `base`, each stored as an image table, in
// lexicographic order of the tables. `group` is the abstract group on the
// indices 0..k-1 with product i*j = maps[i] o maps[j]; index 0 is the identity.
struct AutomorphismGroup {
  FiniteGroup base;
  std::vector<Table> maps;
  FiniteGroup group;

  int size() const { return static_cast<int>(maps.size()); }
  std::optional<int> index_of(const Table& f) const;
  GroupMap map(int i) const { return {base, base, maps[i]}; }
};

// All homomorphisms g -> h (backtracking over images of a generating set),
// lexicographically ordered.
std::vector<Table> homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                 const Limits& limits = {});
std::vector<Table> endomorphisms(const FiniteGroup& g, const Limits& limits = {});
AutomorphismGroup automorphisms(const FiniteGroup& g, const Limits& limits = {});

// Builds the composition table for a set of automorphisms closed under
// composition. The list is sorted first; throws if it is not closed.
AutomorphismGroup automorphism_subgroup(const FiniteGroup& base, std::vector<Table> maps);

// Indices (into aut.maps) of the inner automorphisms.
std::vector<Elem> inner_automorphisms(const AutomorphismGroup& aut);

}  // namespace rbg
