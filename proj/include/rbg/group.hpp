#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbg/error.hpp"

namespace rbg {

// Size bounds and worker count shared by every search in the library.
struct Limits {
  std::size_t max_order = 64;        // automorphism / endomorphism searches
  std::size_t max_enum_order = 16;   // RB operator enumeration
  std::size_t warn_enum_order = 12;
  std::uint64_t cochain_budget = 10'000'000;
  std::uint64_t triplet_budget = 1'000'000;
  unsigned workers = 1;
};

using Table = std::vector<Elem>;  // row-major n x n, or a length-n map

// Finite group given by its Cayley table. Index 0 is the identity. Copies
// share the underlying tables, so passing by value is cheap.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  // Verifies the group axioms (throws LawViolation with the first failing
  // triple) and requires element 0 to be the identity.
  static FiniteGroup from_table(Table table, std::size_t n,
                                std::vector<std::string> labels = {});

  int order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return d_->table[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  // a^-1 b, the "difference" when the group is written additively
  Elem ldiv(Elem a, Elem b) const { return mul(inv(a), b); }
  Elem conj(Elem x, Elem y) const { return mul(mul(x, y), inv(x)); }  // x y x^-1
  Elem pow(Elem a, long k) const;
  int elem_order(Elem a) const { return d_->elem_order[a]; }

  const Table& table() const { return d_->table; }
  const Table& inverses() const { return d_->inverse; }
  const Elem* row(Elem a) const { return d_->table.data() + static_cast<std::size_t>(a) * n_; }

  bool has_labels() const { return !d_->labels.empty(); }
  std::string label(Elem a) const;
  std::optional<Elem> find_label(std::string_view s) const;

  bool is_abelian() const { return d_->abelian; }
  bool same_table(const FiniteGroup& o) const { return n_ == o.n_ && d_->table == o.d_->table; }

 private:
  struct Data {
    Table table;
    Table inverse;
    std::vector<int> elem_order;
    std::vector<std::string> labels;
    bool abelian = true;
  };
  std::shared_ptr<const Data> d_;
  int n_ = 1;
};

// First violation of associativity / identity / inverses, or nullopt.
std::optional<Witness> group_axiom_violation(const Table& table, std::size_t n);

struct GroupMap {
  FiniteGroup domain;
  FiniteGroup codomain;
  Table images;

  Elem operator()(Elem x) const { return images[x]; }
};

GroupMap identity_map(const FiniteGroup& g);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);  // outer o inner

std::optional<Witness> homomorphism_violation(const GroupMap& f);
std::optional<Witness> anti_homomorphism_violation(const GroupMap& f);
bool is_homomorphism(const GroupMap& f);
bool is_anti_homomorphism(const GroupMap& f);
bool is_bijective(const GroupMap& f);

// Plain table helpers for self-maps.
Table compose_tables(const Table& outer, const Table& inner);
Table invert_table(const Table& f);
Table identity_table(int n);

// Subgroup generated by the given elements, sorted.
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
// Small generating set, chosen greedily and deterministically.
std::vector<Elem> generating_set(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> s);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Elem> s);
std::vector<Elem> center(const FiniteGroup& g);

GroupMap inner_automorphism(const FiniteGroup& g, Elem x);  // y -> x y x^-1

struct Quotient {
  FiniteGroup group;
  GroupMap projection;
  std::vector<Elem> coset_reps;  // least element of each coset
};
Quotient quotient(const FiniteGroup& g, std::span<const Elem> normal);

struct Subgroup {
  FiniteGroup group;
  GroupMap embedding;
};
Subgroup subgroup(const FiniteGroup& g, std::span<const Elem> elems);

// Index of (a, b) is a * |g2| + b.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

}  // namespace rbg
