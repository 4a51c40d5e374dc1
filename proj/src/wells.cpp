#include "rbg/wells.hpp"

#include <algorithm>
#include <set>

namespace rbg {

AutomorphismGroup rb_automorphisms(const RotaBaxterOperator& r, const Limits& limits) {
  AutomorphismGroup all = automorphisms(r.group, limits);
  std::vector<Table> keep;
  for (const Table& f : all.maps) {
    bool ok = true;
    for (Elem x = 0; x < r.group.order() && ok; ++x) ok = f[r(x)] == r(f[x]);
    if (ok) keep.push_back(f);
  }
  return automorphism_subgroup(r.group, std::move(keep));
}

AutomorphismGroup aut_i(const RBExtension& e, const Limits& limits) {
  AutomorphismGroup rb = rb_automorphisms(e.re, limits);
  std::vector<Table> keep;
  for (const Table& f : rb.maps) {
    bool ok = true;
    for (Elem y = 0; y < e.i.order() && ok; ++y) ok = e.base(f[e.at(0, y)]) == 0;
    if (ok) keep.push_back(f);
  }
  return automorphism_subgroup(e.e, std::move(keep));
}

namespace {

bool fixes_h_and_i(const RBExtension& e, const Table& f) {
  for (Elem y = 0; y < e.i.order(); ++y) {
    if (f[e.at(0, y)] != e.at(0, y)) return false;
  }
  for (Elem h = 0; h < e.h().order(); ++h) {
    if (e.base(f[e.at(h, 0)]) != h) return false;
  }
  return true;
}

void require_same_module(const RBExtension& e, const RBModule& m) {
  if (!e.h().same_table(m.h()) || !e.i.same_table(m.i) || e.ri != m.ri || e.mu != m.mu ||
      e.rh.images != m.rh.images) {
    throw InvalidInput("wells: the extension was not built over this module");
  }
}

}  // namespace

AutomorphismGroup aut_hi(const RBExtension& e, const Limits& limits) {
  AutomorphismGroup ai = aut_i(e, limits);
  std::vector<Table> keep;
  for (const Table& f : ai.maps) {
    if (fixes_h_and_i(e, f)) keep.push_back(f);
  }
  return automorphism_subgroup(e.e, std::move(keep));
}

std::optional<int> CompatiblePairs::index_of(int phi, int psi) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{phi, psi});
  if (it == pairs.end() || *it != std::pair{phi, psi}) return std::nullopt;
  return static_cast<int>(it - pairs.begin());
}

bool is_compatible(const RBModule& m, const Table& phi, const Table& psi) {
  for (Elem h = 0; h < m.h().order(); ++h) {
    for (Elem y = 0; y < m.i.order(); ++y) {
      // psi mu_h = mu_{phi h} psi
      if (psi[m.mu[h][y]] != m.mu[phi[h]][psi[y]]) return false;
    }
  }
  return true;
}

CompatiblePairs c_mu(const RBModule& m, const Limits& limits) {
  CompatiblePairs c{rb_automorphisms(m.rh, limits),
                    rb_automorphisms(RotaBaxterOperator{m.i, m.ri}, limits), {}, {}};
  for (int a = 0; a < c.aut_h.size(); ++a) {
    for (int b = 0; b < c.aut_i.size(); ++b) {
      if (is_compatible(m, c.aut_h.maps[a], c.aut_i.maps[b])) c.pairs.emplace_back(a, b);
    }
  }
  const std::size_t n = c.pairs.size();
  Table t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto idx = c.index_of(c.aut_h.group.mul(c.pairs[x].first, c.pairs[y].first),
                            c.aut_i.group.mul(c.pairs[x].second, c.pairs[y].second));
      if (!idx) throw Error("c_mu: compatible pairs are not closed");
      t[x * n + y] = *idx;
    }
  }
  c.group = FiniteGroup::from_table(std::move(t), n);
  return c;
}

CocyclePair act_on_pair(const RBModule& m, const Table& phi, const Table& psi,
                        const CocyclePair& p) {
  if (!is_bijective(GroupMap{m.h(), m.h(), phi}) || !is_bijective(GroupMap{m.i, m.i, psi}) ||
      !is_compatible(m, phi, psi)) {
    throw InvalidInput("act_on_pair: pair is not in C_mu");
  }
  const Table pinv = invert_table(psi);
  CocyclePair r{Cochain(2, m.h().order()), Cochain(1, m.h().order())};
  for (std::size_t s = 0; s < r.tau.size(); ++s) {
    auto t = r.tau.tuple(s);
    r.tau.values()[s] = pinv[p.tau({phi[t[0]], phi[t[1]]})];
  }
  for (std::size_t s = 0; s < r.g.size(); ++s) {
    auto t = r.g.tuple(s);
    r.g.values()[s] = pinv[p.g({phi[t[0]]})];
  }
  return r;
}

CocyclePair twisted_cocycle(const RBExtension& e, const Table& phi, const Table& psi) {
  const FiniteGroup& E = e.e;
  const FiniteGroup& h = e.h();
  const Table pinv = invert_table(psi);
  auto s = [&](Elem x) { return e.section(phi[x]); };
  CocyclePair r{Cochain(2, h.order()), Cochain(1, h.order())};
  for (Elem a = 1; a < h.order(); ++a) {
    for (Elem b = 1; b < h.order(); ++b) {
      const Elem x = E.ldiv(s(h.mul(a, b)), E.mul(s(a), s(b)));
      r.tau.set({a, b}, pinv[e.fiber(x)]);
    }
    r.g.set({a}, pinv[e.fiber(E.ldiv(s(e.rh(a)), e.re(s(a))))]);
  }
  return r;
}

std::pair<Table, Table> restriction(const RBExtension& e, const Table& gamma, const Table& s) {
  Table gh(e.h().order()), gi(e.i.order());
  for (Elem h = 0; h < e.h().order(); ++h) gh[h] = e.base(gamma[s[h]]);
  for (Elem y = 0; y < e.i.order(); ++y) {
    const Elem x = gamma[e.include(y)];
    if (e.base(x) != 0) throw InvalidInput("restriction: automorphism does not preserve I");
    gi[y] = e.fiber(x);
  }
  return {std::move(gh), std::move(gi)};
}

Table eta(const RBExtension& e, const Cochain& lambda) { return fiber_map(e, lambda); }

Cochain zeta(const RBExtension& e, const Table& gamma) {
  Cochain c(1, e.h().order());
  for (Elem h = 1; h < e.h().order(); ++h) c.set({h}, e.fiber(gamma[e.section(h)]));
  return c;
}

WellsData compute_wells(const RBExtension& e, const RBModule& m, const Limits& limits) {
  require_same_module(e, m);
  WellsData d;
  d.z1 = z1_rbe(m, limits);
  d.aut_i = aut_i(e, limits);
  d.cmu = c_mu(m, limits);
  d.h2 = h2_rbe(m, limits);
  for (int a = 0; a < d.aut_i.size(); ++a) {
    if (fixes_h_and_i(e, d.aut_i.maps[a])) d.aut_hi.push_back(a);
  }

  for (const Cochain& l : d.z1) {
    auto idx = d.aut_i.index_of(eta(e, l));
    d.eta.push_back(idx ? *idx : -1);
  }
  for (int a : d.aut_hi) {
    auto it = std::lower_bound(d.z1.begin(), d.z1.end(), zeta(e, d.aut_i.maps[a]));
    d.zeta.push_back(it != d.z1.end() && *it == zeta(e, d.aut_i.maps[a])
                         ? static_cast<int>(it - d.z1.begin())
                         : -1);
  }

  for (const Table& gamma : d.aut_i.maps) {
    auto [gh, gi] = restriction(e, gamma, e.section.images);
    auto ph = d.cmu.aut_h.index_of(gh);
    auto pi = d.cmu.aut_i.index_of(gi);
    auto c = ph && pi ? d.cmu.index_of(*ph, *pi) : std::nullopt;
    d.rho.push_back(c ? *c : -1);
  }

  const CocyclePair p{e.tau, e.g};
  const std::size_t nh = d.h2.order();
  std::vector<CocyclePair> canon;
  for (const auto& r : d.h2.reps) canon.push_back(d.h2.canonical(m, add_pairs(m, p, r)));
  for (int c = 0; c < d.cmu.size(); ++c) {
    const Table& phi = d.cmu.phi(c);
    const Table& psi = d.cmu.psi(c);
    const CocyclePair pc = twisted_cocycle(e, phi, psi);
    d.omega.push_back(d.h2.class_of(m, sub_pairs(m, pc, p)));
    const CocyclePair target = d.h2.canonical(m, pc);
    d.omega_hits.push_back(static_cast<int>(std::count(canon.begin(), canon.end(), target)));
    std::vector<int> row;
    for (const auto& r : d.h2.reps) row.push_back(d.h2.class_of(m, act_on_pair(m, phi, psi, r)));
    d.class_action.push_back(std::move(row));
  }
  d.class_add.assign(nh, std::vector<int>(nh));
  for (std::size_t a = 0; a < nh; ++a) {
    for (std::size_t b = 0; b < nh; ++b) {
      d.class_add[a][b] = d.h2.class_of(m, add_pairs(m, d.h2.reps[a], d.h2.reps[b]));
    }
  }
  return d;
}

WellsReport check_wells_exactness(const WellsData& d) {
  WellsReport r;
  r.z1_order = d.z1.size();
  r.autI_order = d.aut_i.maps.size();
  r.autHI_order = d.aut_hi.size();
  r.cmu_order = d.cmu.pairs.size();
  r.h2_order = d.h2.order();
  auto fail = [&](bool& flag, std::string law, std::vector<Elem> at) {
    flag = false;
    r.witnesses.push_back({std::move(law), std::move(at)});
  };

  // 0 -> Z^1 -> Aut_I
  std::set<int> eta_image;
  for (std::size_t k = 0; k < d.eta.size(); ++k) {
    const int a = d.eta[k];
    if (a < 0) {
      fail(r.exact_at_z1, "eta(lambda) is not in Aut_I", {Elem(k)});
    } else if (!eta_image.insert(a).second) {
      fail(r.exact_at_z1, "eta is not injective", {Elem(k)});
    }
  }
  if (d.aut_hi.size() != d.z1.size()) {
    fail(r.exact_at_z1, "|Aut^{H,I}| differs from |Z^1|",
         {Elem(d.aut_hi.size()), Elem(d.z1.size())});
  }
  for (std::size_t k = 0; k < d.aut_hi.size() && k < d.zeta.size(); ++k) {
    const int z = d.zeta[k];
    if (z < 0 || d.eta[z] != d.aut_hi[k]) fail(r.exact_at_z1, "eta o zeta is not the identity", {Elem(k)});
  }

  // Ker rho = eta(Z^1)
  const auto id = d.cmu.index_of(0, 0);
  std::set<int> ker_rho, im_rho;
  for (std::size_t a = 0; a < d.rho.size(); ++a) {
    if (d.rho[a] < 0) {
      fail(r.exact_at_cmu, "rho(gamma) is outside C_mu", {Elem(a)});
      continue;
    }
    im_rho.insert(d.rho[a]);
    if (id && d.rho[a] == *id) ker_rho.insert(static_cast<int>(a));
  }
  if (ker_rho != eta_image) {
    std::vector<int> diff;
    std::set_symmetric_difference(ker_rho.begin(), ker_rho.end(), eta_image.begin(),
                                  eta_image.end(), std::back_inserter(diff));
    fail(r.exact_at_autI, "Ker rho differs from eta(Z^1)", {Elem(diff.front())});
  }

  // Im rho = Ker omega
  std::set<int> ker_omega;
  for (std::size_t c = 0; c < d.omega.size(); ++c) {
    if (d.omega[c] == 0) ker_omega.insert(static_cast<int>(c));
    if (d.omega_hits[c] != 1) fail(r.omega_well_defined, "translation class is not unique", {Elem(c)});
  }
  if (im_rho != ker_omega) {
    std::vector<int> diff;
    std::set_symmetric_difference(im_rho.begin(), im_rho.end(), ker_omega.begin(),
                                  ker_omega.end(), std::back_inserter(diff));
    fail(r.exact_at_cmu, "Im rho differs from Ker omega", {Elem(diff.front())});
  }

  // omega(c1 c2) = omega(c1)^c2 + omega(c2)
  const int n = d.cmu.size();
  for (int a = 0; a < n && r.omega_is_derivation; ++a) {
    for (int b = 0; b < n; ++b) {
      const int lhs = d.omega[d.cmu.group.mul(a, b)];
      const int rhs = d.class_add[d.class_action[b][d.omega[a]]][d.omega[b]];
      if (lhs != rhs) {
        fail(r.omega_is_derivation, "omega(c1 c2) != omega(c1)^c2 + omega(c2)", {a, b});
        break;
      }
    }
  }
  return r;
}

}  // namespace rbg
