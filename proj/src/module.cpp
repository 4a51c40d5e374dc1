#include "rbg/module.hpp"

#include "rbg/automorphisms.hpp"

namespace rbg {

std::optional<Witness> module_violation(const RotaBaxterOperator& rh, const FiniteGroup& i,
                                        const Table& ri, const std::vector<Table>& mu) {
  const FiniteGroup& h = rh.group;
  if (!i.is_abelian()) return Witness{"I abelian", {}};
  if (static_cast<int>(ri.size()) != i.order()) return Witness{"R_I shape", {}};
  if (auto w = homomorphism_violation({i, i, ri})) return Witness{"R_I endomorphism", w->at};
  if (static_cast<int>(mu.size()) != h.order()) return Witness{"action shape", {}};
  for (Elem x = 0; x < h.order(); ++x) {
    GroupMap f{i, i, mu[x]};
    if (static_cast<int>(mu[x].size()) != i.order() || !is_bijective(f) || !is_homomorphism(f)) {
      return Witness{"mu_h automorphism", {x}};
    }
  }
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      const Table& ab = mu[h.mul(a, b)];
      for (Elem y = 0; y < i.order(); ++y) {
        if (ab[y] != mu[b][mu[a][y]]) return Witness{"action anti-homomorphism", {a, b, y}};
      }
    }
  }
  // mu_{R(h)}(R_I z) = R_I( mu_{h R(h)}(z + R_I z) - mu_{R(h)}(R_I z) )
  for (Elem x = 0; x < h.order(); ++x) {
    const Table& m_r = mu[rh(x)];
    const Table& m_hr = mu[h.mul(x, rh(x))];
    for (Elem z = 0; z < i.order(); ++z) {
      const Elem lhs = m_r[ri[z]];
      const Elem rhs = ri[i.ldiv(m_r[ri[z]], m_hr[i.mul(z, ri[z])])];
      if (lhs != rhs) return Witness{"module condition", {x, z}};
    }
  }
  return std::nullopt;
}

bool is_rb_module(const RotaBaxterOperator& rh, const FiniteGroup& i, const Table& ri,
                  const std::vector<Table>& mu) {
  return !module_violation(rh, i, ri, mu);
}

RBModule make_module(const RotaBaxterOperator& rh, const FiniteGroup& i, Table ri,
                     std::vector<Table> mu) {
  if (auto w = module_violation(rh, i, ri, mu)) throw LawViolation(*w);
  return RBModule{rh, i, std::move(ri), std::move(mu), induced_circle_group(rh)};
}

std::vector<Table> trivial_action(const FiniteGroup& h, const FiniteGroup& i) {
  return std::vector<Table>(h.order(), identity_table(i.order()));
}

std::vector<std::vector<Table>> all_actions(const FiniteGroup& h, const FiniteGroup& i,
                                            const Limits& limits) {
  const AutomorphismGroup aut = automorphisms(i, limits);
  // anti-homomorphisms into Aut(I) are homomorphisms into its opposite group
  const int k = aut.size();
  Table op(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) op[a * k + b] = aut.group.mul(b, a);
  }
  const FiniteGroup aut_op = FiniteGroup::from_table(std::move(op), k);
  std::vector<std::vector<Table>> out;
  for (const Table& f : homomorphisms(h, aut_op, limits)) {
    std::vector<Table> mu;
    for (Elem x = 0; x < h.order(); ++x) mu.push_back(aut.maps[f[x]]);
    out.push_back(std::move(mu));
  }
  return out;
}

std::vector<RBModule> all_modules(const FiniteGroup& h, const FiniteGroup& i, const Limits& limits) {
  std::vector<RBModule> out;
  const auto actions = all_actions(h, i, limits);
  const auto endos = endomorphisms(i, limits);
  for (const auto& rh : enumerate_rb_operators(h, limits)) {
    const FiniteGroup circle = induced_circle_group(rh);
    for (const auto& ri : endos) {
      for (const auto& mu : actions) {
        if (is_rb_module(rh, i, ri, mu)) out.push_back(RBModule{rh, i, ri, mu, circle});
      }
    }
  }
  return out;
}

bool action_commutes_with_ri(const RBModule& m) {
  for (const Table& a : m.mu) {
    if (compose_tables(a, m.ri) != compose_tables(m.ri, a)) return false;
  }
  return true;
}

}  // namespace rbg
