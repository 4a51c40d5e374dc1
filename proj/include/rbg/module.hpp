#pragma once

#include <optional>
#include <vector>

#include "rbg/group.hpp"
#include "rbg/rota_baxter.hpp"

namespace rbg {

// Abelian RB group (I, R_I) with a right action of (H, R_H): mu[h] is the
// automorphism y -> y.h, and mu[h1 h2] = mu[h2] o mu[h1].
struct RBModule {
  RotaBaxterOperator rh;
  FiniteGroup i;
  Table ri;
  std::vector<Table> mu;
  FiniteGroup circle;  // (H, o_{R_H})

  const FiniteGroup& h() const { return rh.group; }
  Elem act(Elem y, Elem h) const { return mu[h][y]; }
};

std::optional<Witness> module_violation(const RotaBaxterOperator& rh, const FiniteGroup& i,
                                        const Table& ri, const std::vector<Table>& mu);
bool is_rb_module(const RotaBaxterOperator& rh, const FiniteGroup& i, const Table& ri,
                  const std::vector<Table>& mu);
// Throws LawViolation when the data is not a module.
RBModule make_module(const RotaBaxterOperator& rh, const FiniteGroup& i, Table ri,
                     std::vector<Table> mu);

std::vector<Table> trivial_action(const FiniteGroup& h, const FiniteGroup& i);

// Every anti-homomorphism H -> Aut(I), as per-element automorphism tables.
std::vector<std::vector<Table>> all_actions(const FiniteGroup& h, const FiniteGroup& i,
                                            const Limits& limits = {});

// Every module structure on (H, I): all RB operators on H, all endomorphisms
// of I and all actions that satisfy the module condition.
std::vector<RBModule> all_modules(const FiniteGroup& h, const FiniteGroup& i,
                                  const Limits& limits = {});

// True when every mu_h commutes with R_I.
bool action_commutes_with_ri(const RBModule& m);

}  // namespace rbg
