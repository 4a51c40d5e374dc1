#include "rbg/triplets.hpp"

#include <algorithm>
#include <cmath>

namespace rbg {

std::optional<Witness> triplet_violation(const Triplet& t, const RotaBaxterOperator& rh,
                                         const RotaBaxterOperator& ri) {
  for (Elem h = 0; h < static_cast<Elem>(t.mu.size()); ++h) {
    GroupMap f{ri.group, ri.group, t.mu[h]};
    if (static_cast<int>(t.mu[h].size()) != ri.group.order() || !is_bijective(f) ||
        !is_homomorphism(f)) {
      return Witness{"mu_h automorphism", {h}};
    }
  }
  return extension_violation(rh, ri.group, ri.images, t.mu, t.tau, t.g);
}

bool verify_triplet(const Triplet& t, const RotaBaxterOperator& rh, const RotaBaxterOperator& ri) {
  return !triplet_violation(t, rh, ri);
}

RBExtension build_triplet_extension(const Triplet& t, const RotaBaxterOperator& rh,
                                    const RotaBaxterOperator& ri) {
  if (auto w = triplet_violation(t, rh, ri)) throw LawViolation(*w);
  return build_extension(rh, ri.group, ri.images, t.mu, t.tau, t.g);
}

Triplet extract_triplet(const RBExtension& e, const Table& s) {
  CocyclePair p = extract_cocycle(e, s);
  return {extract_action(e, s), std::move(p.tau), std::move(p.g)};
}

std::optional<Cochain> triplets_equivalent(const Triplet& t1, const Triplet& t2,
                                           const RotaBaxterOperator& rh,
                                           const RotaBaxterOperator& ri) {
  const FiniteGroup& h = rh.group;
  const FiniteGroup& i = ri.group;
  Cochain theta(1, h.order());
  auto& v = theta.values();
  auto holds = [&] {
    for (Elem x = 0; x < h.order(); ++x) {
      const Elem th = theta({x});
      const Elem thi = i.inv(th);
      for (Elem y = 0; y < i.order(); ++y) {
        if (t2.mu[x][y] != i.conj(thi, t1.mu[x][y])) return false;
      }
    }
    for (Elem a = 1; a < h.order(); ++a) {
      for (Elem b = 1; b < h.order(); ++b) {
        Elem r = i.mul(i.inv(theta({h.mul(a, b)})), t1.tau({a, b}));
        r = i.mul(i.mul(r, t1.mu[b][theta({a})]), theta({b}));
        if (t2.tau({a, b}) != r) return false;
      }
    }
    for (Elem x = 1; x < h.order(); ++x) {
      const Elem g1 = t1.g({x});
      const Elem lhs = i.mul(theta({rh(x)}), t2.g({x}));
      const Elem inner = i.mul(i.mul(i.inv(g1), t1.mu[rh(x)][theta({x})]), g1);
      if (lhs != i.mul(g1, ri(inner))) return false;
    }
    return true;
  };
  for (;;) {
    if (holds()) return theta;
    std::size_t k = v.size();
    while (k > 0 && ++v[k - 1] == i.order()) v[--k] = 0;
    if (k == 0) return std::nullopt;
  }
}

OuterAutomorphisms outer_automorphisms(const FiniteGroup& i, const Limits& limits) {
  AutomorphismGroup aut = automorphisms(i, limits);
  std::vector<Elem> inner = inner_automorphisms(aut);
  Quotient out = quotient(aut.group, inner);
  return {std::move(aut), std::move(inner), std::move(out)};
}

Coupling coupling_of(const Triplet& t, const OuterAutomorphisms& out) {
  Coupling c;
  for (const Table& m : t.mu) {
    auto idx = out.aut.index_of(m);
    if (!idx) throw InvalidInput("coupling: mu_h is not an automorphism");
    c.classes.push_back(out.out.projection(*idx));
    c.reps.push_back(m);
  }
  return c;
}

Coupling trivial_coupling(const FiniteGroup& h, const OuterAutomorphisms& out) {
  return {std::vector<Elem>(h.order(), 0),
          std::vector<Table>(h.order(), identity_table(out.aut.base.order()))};
}

bool is_coupling(const Coupling& c, const FiniteGroup& h, const OuterAutomorphisms& out) {
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      if (c.classes[h.mul(a, b)] != out.out.group.mul(c.classes[b], c.classes[a])) return false;
    }
  }
  return true;
}

TripletCensus h2_alpha(const RotaBaxterOperator& rh, const RotaBaxterOperator& ri,
                       const Coupling& alpha, const OuterAutomorphisms& out, const Limits& limits) {
  const FiniteGroup& h = rh.group;
  const FiniteGroup& i = ri.group;
  const int hn = h.order();
  if (!is_coupling(alpha, h, out)) throw InvalidInput("h2_alpha: not a coupling");
  if (alpha.classes[0] != 0) throw InvalidInput("h2_alpha: coupling must send e to the trivial class");

  // lifts of alpha(h) for h != e; mu_e is the identity
  std::vector<std::vector<Elem>> lifts(hn);
  for (Elem x = 1; x < hn; ++x) {
    for (Elem a = 0; a < out.aut.size(); ++a) {
      if (out.out.projection(a) == alpha.classes[x]) lifts[x].push_back(a);
    }
  }
  TripletCensus census;
  long double count = 1;
  for (Elem x = 1; x < hn; ++x) count *= lifts[x].size();
  count *= std::pow(static_cast<long double>(i.order()),
                    static_cast<long double>(Cochain::slots(2, hn) + Cochain::slots(1, hn)));
  if (count > static_cast<long double>(limits.triplet_budget)) {
    throw BudgetExceeded("h2_alpha: " + std::to_string(static_cast<double>(count)) +
                         " candidates exceed the budget of " + std::to_string(limits.triplet_budget));
  }
  census.candidates = static_cast<std::uint64_t>(count);

  std::vector<std::size_t> pick(hn, 0);
  for (;;) {
    std::vector<Table> mu(hn, identity_table(i.order()));
    for (Elem x = 1; x < hn; ++x) mu[x] = out.aut.maps[lifts[x][pick[x]]];
    Cochain tau(2, hn);
    for (;;) {
      Cochain g(1, hn);
      // the group law does not depend on g
      auto w0 = extension_violation(rh, i, ri.images, mu, tau, g);
      const bool group_ok = !w0 || w0->law.rfind("group law", 0) != 0;
      for (; group_ok;) {
        Triplet t{mu, tau, g};
        if (verify_triplet(t, rh, ri)) census.triplets.push_back(std::move(t));
        auto& gv = g.values();
        std::size_t k = gv.size();
        while (k > 0 && ++gv[k - 1] == i.order()) gv[--k] = 0;
        if (k == 0) break;
      }
      auto& tv = tau.values();
      std::size_t k = tv.size();
      while (k > 0 && ++tv[k - 1] == i.order()) tv[--k] = 0;
      if (k == 0) break;
    }
    int x = hn - 1;
    while (x >= 1 && ++pick[x] == lifts[x].size()) pick[x--] = 0;
    if (x < 1) break;
  }

  for (std::size_t k = 0; k < census.triplets.size(); ++k) {
    int cls = -1;
    for (std::size_t r = 0; r < census.reps.size() && cls < 0; ++r) {
      if (triplets_equivalent(census.triplets[k], census.triplets[census.reps[r]], rh, ri)) {
        cls = static_cast<int>(r);
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(census.reps.size());
      census.reps.push_back(k);
    }
    census.class_of.push_back(cls);
  }
  return census;
}

namespace {

std::optional<int> census_class(const Triplet& t, const TripletCensus& census,
                                const RotaBaxterOperator& rh, const RotaBaxterOperator& ri) {
  for (std::size_t r = 0; r < census.reps.size(); ++r) {
    if (triplets_equivalent(t, census.triplets[census.reps[r]], rh, ri)) return static_cast<int>(r);
  }
  return std::nullopt;
}

Triplet shifted(const Triplet& t, const CocyclePair& p, const GroupMap& emb, const FiniteGroup& i) {
  Triplet r = t;
  for (std::size_t s = 0; s < r.tau.size(); ++s) {
    r.tau.values()[s] = i.mul(t.tau.values()[s], emb(p.tau.values()[s]));
  }
  for (std::size_t s = 0; s < r.g.size(); ++s) {
    r.g.values()[s] = i.mul(t.g.values()[s], emb(p.g.values()[s]));
  }
  return r;
}

}  // namespace

CentralAction central_action(const RotaBaxterOperator& rh, const RotaBaxterOperator& ri,
                             const TripletCensus& census, const Limits& limits,
                             bool check_all_representatives) {
  const FiniteGroup& i = ri.group;
  if (census.triplets.empty()) throw InvalidInput("central_action: empty census");
  const std::vector<Elem> z = center(i);
  for (Elem c : z) {
    if (!std::binary_search(z.begin(), z.end(), ri(c))) {
      throw InvalidInput("central_action: Z(I) is not invariant under R_I");
    }
  }
  Subgroup zs = subgroup(i, z);
  std::vector<Elem> pos(i.order(), -1);
  for (std::size_t k = 0; k < z.size(); ++k) pos[z[k]] = static_cast<Elem>(k);
  Table rz(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) rz[k] = pos[ri(z[k])];
  std::vector<Table> mu_z(rh.group.order(), Table(z.size()));
  for (Elem h = 0; h < rh.group.order(); ++h) {
    for (std::size_t k = 0; k < z.size(); ++k) mu_z[h][k] = pos[census.triplets[0].mu[h][z[k]]];
  }

  CentralAction a{make_module(rh, zs.group, rz, mu_z), zs, {}, {}, true, true, true, true, {}};
  a.h2 = h2_rbe(a.center, limits);
  const std::size_t nh = a.h2.order();
  const std::size_t nc = census.num_classes();
  a.table.assign(nh, std::vector<int>(nc, -1));
  for (std::size_t c = 0; c < nh; ++c) {
    for (std::size_t k = 0; k < nc; ++k) {
      const Triplet t = shifted(census.triplets[census.reps[k]], a.h2.reps[c], zs.embedding, i);
      if (auto w = triplet_violation(t, rh, ri)) {
        a.all_valid = false;
        a.witnesses.push_back({"acted triplet invalid: " + w->law, {Elem(c), Elem(k)}});
        continue;
      }
      auto cls = census_class(t, census, rh, ri);
      if (!cls) {
        a.all_valid = false;
        a.witnesses.push_back({"acted triplet outside census", {Elem(c), Elem(k)}});
        continue;
      }
      a.table[c][k] = *cls;
    }
  }
  if (check_all_representatives) {
    for (const auto& p : a.h2.z2) {
      const int c = a.h2.class_of(a.center, p);
      for (std::size_t j = 0; j < census.triplets.size(); ++j) {
        const int k = census.class_of[j];
        const Triplet t = shifted(census.triplets[j], p, zs.embedding, i);
        auto cls = verify_triplet(t, rh, ri) ? census_class(t, census, rh, ri) : std::nullopt;
        if (!cls || *cls != a.table[c][k]) {
          a.well_defined = false;
          a.witnesses.push_back({"action depends on representatives", {Elem(c), Elem(j)}});
        }
      }
    }
  }
  for (std::size_t k = 0; k < nc; ++k) {
    if (a.table[0][k] != static_cast<int>(k)) {
      a.identity_trivial = false;
      a.witnesses.push_back({"identity class moves a point", {0, Elem(k)}});
    }
  }
  for (std::size_t c = 1; c < nh; ++c) {
    for (std::size_t k = 0; k < nc; ++k) {
      if (a.table[c][k] == static_cast<int>(k)) {
        a.free = false;
        a.witnesses.push_back({"nontrivial class fixes a point", {Elem(c), Elem(k)}});
      }
    }
  }
  return a;
}

}  // namespace rbg
