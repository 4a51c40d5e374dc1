#pragma once

#include <optional>
#include <vector>

#include "rbg/cohomology.hpp"

namespace rbg {

// An RB extension I -> E -> H realized on the carrier H x I, with
// (h, y) stored at index h*|I| + y and
//   (h1, y1)(h2, y2) = (h1 h2, tau(h1, h2) mu_{h2}(y1) y2)
//   R_E(h, y)        = (R_H h, g(h) R_I(g(h)^-1 mu_{R_H h}(y) g(h))).
// For abelian I the operator reads (R_H h, g(h) + R_I(mu_{R_H h} y)).
struct RBExtension {
  RotaBaxterOperator rh;
  FiniteGroup i;
  Table ri;
  std::vector<Table> mu;
  Cochain tau;
  Cochain g;

  FiniteGroup e;
  RotaBaxterOperator re;
  GroupMap include;  // y -> (e, y)
  GroupMap project;  // (h, y) -> h
  GroupMap section;  // h -> (h, e)

  const FiniteGroup& h() const { return rh.group; }
  Elem at(Elem h, Elem y) const { return h * i.order() + y; }
  Elem base(Elem x) const { return x / i.order(); }
  Elem fiber(Elem x) const { return x % i.order(); }
};

// Builds the candidate and reports the first failure of the group axioms or
// of the RB law (law names are prefixed "group law: " / "Rota-Baxter law").
std::optional<Witness> extension_violation(const RotaBaxterOperator& rh, const FiniteGroup& i,
                                           const Table& ri, const std::vector<Table>& mu,
                                           const Cochain& tau, const Cochain& g);
RBExtension build_extension(const RotaBaxterOperator& rh, const FiniteGroup& i, const Table& ri,
                            const std::vector<Table>& mu, const Cochain& tau, const Cochain& g);

// Requires p to be a cocycle of m; throws LawViolation naming the failing
// component ("delta2" or "beta") otherwise.
RBExtension build_abelian_extension(const RBModule& m, const CocyclePair& p);

// s is an st-section when pi o s = id and s(e) = e.
std::optional<Witness> section_violation(const RBExtension& e, const Table& s);
// All st-sections h -> (h, theta(h)), theta(e) = e, lexicographic in theta.
std::vector<Table> st_sections(const RBExtension& e);

// tau(h1, h2) = s(h1 h2)^-1 s(h1) s(h2) and R_E(s(h)) = s(R_H h) g(h), read
// back in I. Works for any I; throws InvalidInput if s is not an st-section.
CocyclePair extract_cocycle(const RBExtension& e, const Table& s);
// mu_h(y) = s(h)^-1 y s(h)
std::vector<Table> extract_action(const RBExtension& e, const Table& s);

// (h, y) -> (h, theta(h) y)
Table fiber_map(const RBExtension& e, const Cochain& theta);
// Some theta for which fiber_map(e1, theta) is an RB isomorphism e1 -> e2
// (then p1 - p2 = d1_RBE(theta) for abelian kernels).
std::optional<Cochain> are_equivalent(const RBExtension& e1, const RBExtension& e2);

struct Classification {
  std::size_t num_classes = 0;
  std::size_t h2_order = 0;
  bool match = false;
  std::vector<CocyclePair> class_representatives;  // first member of each class
  std::vector<int> class_of;                       // per element of Z^2 (sorted)
};
Classification classify_abelian(const RBModule& m, const Limits& limits = {});

// Semidirect product (tau = e) with the operator above. mu must be an
// anti-homomorphism H -> Aut(I); throws LawViolation with the failing pair
// when the RB law does not hold.
RBExtension build_split_extension(const RotaBaxterOperator& rh, const RotaBaxterOperator& ri,
                                  const std::vector<Table>& mu, const Cochain& g);

bool section_is_homomorphism(const RBExtension& e, const Table& s);
// Brute-force search over st-sections for one that is a homomorphism.
std::optional<Table> homomorphic_section(const RBExtension& e);

}  // namespace rbg
