#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbg/automorphisms.hpp"
#include "rbg/extensions.hpp"

namespace rbg {

// Automorphisms gamma of r.group with gamma o R = R o gamma.
AutomorphismGroup rb_automorphisms(const RotaBaxterOperator& r, const Limits& limits = {});
// RB automorphisms of E mapping I into I.
AutomorphismGroup aut_i(const RBExtension& e, const Limits& limits = {});
// The subgroup of aut_i acting trivially on I and on E/I.
AutomorphismGroup aut_hi(const RBExtension& e, const Limits& limits = {});

// Pairs (phi, psi) in Aut(H, R_H) x Aut(I, R_I) with mu_h = psi^-1 mu_{phi h} psi,
// as index pairs into aut_h / aut_i, sorted. Product is componentwise
// composition: (phi1, psi1)(phi2, psi2) = (phi1 o phi2, psi1 o psi2).
struct CompatiblePairs {
  AutomorphismGroup aut_h;
  AutomorphismGroup aut_i;
  std::vector<std::pair<int, int>> pairs;
  FiniteGroup group;

  int size() const { return static_cast<int>(pairs.size()); }
  std::optional<int> index_of(int phi, int psi) const;
  const Table& phi(int c) const { return aut_h.maps[pairs[c].first]; }
  const Table& psi(int c) const { return aut_i.maps[pairs[c].second]; }
};
CompatiblePairs c_mu(const RBModule& m, const Limits& limits = {});
bool is_compatible(const RBModule& m, const Table& phi, const Table& psi);

// p^(phi, psi) = psi^-1 p(phi ., phi .); a right action of C_mu. Throws
// InvalidInput when the pair is not compatible.
CocyclePair act_on_pair(const RBModule& m, const Table& phi, const Table& psi,
                        const CocyclePair& p);
// The same, read off E through the relabelled maps (i o psi, phi^-1 o pi)
// with the section h -> s(phi h).
CocyclePair twisted_cocycle(const RBExtension& e, const Table& phi, const Table& psi);

// (gamma_H, gamma_I) with gamma_H(h) = pi(gamma(s(h))), gamma_I = gamma|_I.
std::pair<Table, Table> restriction(const RBExtension& e, const Table& gamma, const Table& s);

// eta(lambda)(h, y) = (h, lambda(h) + y); zeta(gamma)(h) = fiber of gamma(s(h)).
Table eta(const RBExtension& e, const Cochain& lambda);
Cochain zeta(const RBExtension& e, const Table& gamma);

// Everything the exactness check consumes, as plain index tables so that
// tests can corrupt single entries.
struct WellsData {
  std::vector<Cochain> z1;        // sorted
  AutomorphismGroup aut_i;        // Aut_I(E, R_E)
  std::vector<int> aut_hi;        // indices into aut_i.maps
  CompatiblePairs cmu;
  H2 h2;

  std::vector<int> eta;           // z1 index -> aut_i index (-1: not in Aut_I)
  std::vector<int> zeta;          // aut_hi position -> z1 index (-1: not a cocycle)
  std::vector<int> rho;           // aut_i index -> cmu index (-1: outside C_mu)
  std::vector<int> omega;         // cmu index -> h2 class
  std::vector<int> omega_hits;    // cmu index -> number of classes h with [E]^h = [E]^c
  std::vector<std::vector<int>> class_action;  // [cmu][class] -> class
  std::vector<std::vector<int>> class_add;     // [class][class] -> class
};
WellsData compute_wells(const RBExtension& e, const RBModule& m, const Limits& limits = {});

struct WellsReport {
  std::size_t z1_order = 0;
  std::size_t autI_order = 0;
  std::size_t autHI_order = 0;
  std::size_t cmu_order = 0;
  std::size_t h2_order = 0;
  bool exact_at_z1 = true;      // eta injective, lands in Aut^{H,I}, zeta its inverse
  bool exact_at_autI = true;    // Ker rho = eta(Z^1)
  bool exact_at_cmu = true;     // Im rho = Ker omega
  bool omega_is_derivation = true;
  bool omega_well_defined = true;
  std::vector<Witness> witnesses;

  bool exact() const {
    return exact_at_z1 && exact_at_autI && exact_at_cmu && omega_is_derivation &&
           omega_well_defined;
  }
};
WellsReport check_wells_exactness(const WellsData& d);

}  // namespace rbg
