#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbg/group.hpp"

namespace rbg {

// Weight-1 Rota-Baxter operator: R(x) R(y) = R(x R(x) y R(x)^-1).
struct RotaBaxterOperator {
  FiniteGroup group;
  Table images;

  Elem operator()(Elem x) const { return images[x]; }
};

std::optional<Witness> rb_violation(const FiniteGroup& g, const Table& images);
bool is_rb_operator(const FiniteGroup& g, const Table& images);
// Throws LawViolation with the first failing (x, y).
RotaBaxterOperator make_rb_operator(const FiniteGroup& g, Table images);

RotaBaxterOperator trivial_operator(const FiniteGroup& g);    // R = e
RotaBaxterOperator inversion_operator(const FiniteGroup& g);  // R(x) = x^-1

// Soft warning text when |G| is above the comfortable enumeration size.
std::optional<std::string> enumeration_warning(const FiniteGroup& g, const Limits& limits);

// All RB operators on g as raw image tables, in lexicographic order.
std::vector<RotaBaxterOperator> enumerate_rb_operators(const FiniteGroup& g,
                                                       const Limits& limits = {});

// x o y = x R(x) y R(x)^-1
FiniteGroup induced_circle_group(const RotaBaxterOperator& r);

struct SkewBrace {
  int order = 1;
  Table add;   // "+"
  Table circ;  // "o"
};

SkewBrace induced_skew_brace(const RotaBaxterOperator& r);
std::optional<Witness> skew_brace_violation(const SkewBrace& s);
bool is_skew_brace(const SkewBrace& s);

// f must be a homomorphism between the two carriers (else InvalidInput).
// Returns the first h with f(R1(h)) != R2(f(h)).
std::optional<Witness> rb_morphism_violation(const GroupMap& f, const RotaBaxterOperator& source,
                                             const RotaBaxterOperator& target);
bool is_rb_morphism(const GroupMap& f, const RotaBaxterOperator& source,
                    const RotaBaxterOperator& target);

// h must be a subgroup (else InvalidInput).
bool is_rb_subgroup(const RotaBaxterOperator& r, std::span<const Elem> h);

// Some RB operator on (carrier, +) whose circle operation is s.circ, or none.
std::optional<RotaBaxterOperator> find_rb_inducing_brace(const SkewBrace& s,
                                                         const Limits& limits = {});

}  // namespace rbg
