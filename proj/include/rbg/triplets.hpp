#pragma once

#include <optional>
#include <vector>

#include "rbg/automorphisms.hpp"
#include "rbg/extensions.hpp"

namespace rbg {

// Non-abelian extension data (mu, tau, g) on the carrier H x I, with the
// group law and operator of RBExtension. mu need not be an anti-homomorphism.
struct Triplet {
  std::vector<Table> mu;
  Cochain tau;
  Cochain g;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Constructive check: builds the candidate group and operator and verifies
// the group axioms and the RB law exhaustively.
std::optional<Witness> triplet_violation(const Triplet& t, const RotaBaxterOperator& rh,
                                         const RotaBaxterOperator& ri);
bool verify_triplet(const Triplet& t, const RotaBaxterOperator& rh, const RotaBaxterOperator& ri);
RBExtension build_triplet_extension(const Triplet& t, const RotaBaxterOperator& rh,
                                    const RotaBaxterOperator& ri);
Triplet extract_triplet(const RBExtension& e, const Table& s);

// A theta: H -> I with theta(e) = e and, writing i_x(z) = x z x^-1,
//   mu2_h = i_{theta(h)^-1} mu1_h
//   tau2(h1, h2) = theta(h1 h2)^-1 tau1(h1, h2) mu1_{h2}(theta(h1)) theta(h2)
//   theta(R_H h) g2(h) = g1(h) R_I(g1(h)^-1 mu1_{R_H h}(theta(h)) g1(h)),
// which is exactly the condition for (h, y) -> (h, theta(h) y) to be an RB
// isomorphism from the extension of t2 to that of t1.
std::optional<Cochain> triplets_equivalent(const Triplet& t1, const Triplet& t2,
                                           const RotaBaxterOperator& rh,
                                           const RotaBaxterOperator& ri);

struct OuterAutomorphisms {
  AutomorphismGroup aut;
  std::vector<Elem> inner;  // indices into aut.maps
  Quotient out;             // Aut(I) / Inn(I) on automorphism indices
};
OuterAutomorphisms outer_automorphisms(const FiniteGroup& i, const Limits& limits = {});

// h -> class of mu_h in Out(I), with one representative automorphism per h.
struct Coupling {
  std::vector<Elem> classes;
  std::vector<Table> reps;
  friend bool operator==(const Coupling& a, const Coupling& b) { return a.classes == b.classes; }
};
Coupling coupling_of(const Triplet& t, const OuterAutomorphisms& out);
Coupling trivial_coupling(const FiniteGroup& h, const OuterAutomorphisms& out);
// mu_{h1 h2} = mu_{h2} o mu_{h1} modulo Inn(I).
bool is_coupling(const Coupling& c, const FiniteGroup& h, const OuterAutomorphisms& out);

struct TripletCensus {
  std::uint64_t candidates = 0;
  std::vector<Triplet> triplets;   // every valid triplet with the coupling
  std::vector<int> class_of;       // per triplet
  std::vector<std::size_t> reps;   // first triplet of each class
  std::size_t num_classes() const { return reps.size(); }
};
// Exhaustive scan of lifts of alpha x normalized tau x normalized g.
TripletCensus h2_alpha(const RotaBaxterOperator& rh, const RotaBaxterOperator& ri,
                       const Coupling& alpha, const OuterAutomorphisms& out,
                       const Limits& limits = {});

// Action of H^2_RBE(H, Z(I)) on the census: [(tau', g')] . [(mu, tau, g)] =
// [(mu, tau tau', g g')].
struct CentralAction {
  RBModule center;
  Subgroup center_group;
  H2 h2;
  std::vector<std::vector<int>> table;  // [h2 class][census class] -> census class
  bool all_valid = true;      // every acted-on triplet passed verify_triplet
  bool well_defined = true;   // independent of the representatives chosen
  bool identity_trivial = true;
  bool free = true;
  std::vector<Witness> witnesses;
};
CentralAction central_action(const RotaBaxterOperator& rh, const RotaBaxterOperator& ri,
                             const TripletCensus& census, const Limits& limits = {},
                             bool check_all_representatives = true);

}  // namespace rbg
