#include <doctest.h>

#include <optional>
#include <set>

#include "helpers.hpp"
#include "rbg/io.hpp"
#include "rbg/wells.hpp"

using namespace rbg;
using namespace rbg::testing;

namespace {

struct Case {
  RBModule m;
  CocyclePair p;
};

// Every extension of Z2 by the given kernel, over every module.
std::vector<Case> cases(const char* in) {
  std::vector<Case> out;
  for (const auto& m : modules_on("Z2", in)) {
    for (const auto& p : z2_rbe(m)) out.push_back({m, p});
  }
  return out;
}

}  // namespace

TEST_CASE("RB automorphism groups") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    const FiniteGroup g = make_group(name);
    CHECK(rb_automorphisms(trivial_operator(g)).maps == automorphisms(g).maps);
  }
  const FiniteGroup z4 = make_group("Z4");
  CHECK(rb_automorphisms(make_rb_operator(z4, identity_table(4))).size() == 2);

  const auto r4 = operator_from_json(read_json_file(std::string(RBG_FIXTURES) + "/operators/S3_R4.json"));
  std::vector<Table> scan;
  for (const auto& f : automorphisms(r4.group).maps) {
    bool ok = true;
    for (Elem x = 0; x < 6; ++x) ok = ok && f[r4(x)] == r4(f[x]);
    if (ok) scan.push_back(f);
  }
  CHECK(rb_automorphisms(r4).maps == scan);
  CHECK(rb_automorphisms(r4).size() == 2);
}

TEST_CASE("C_mu membership") {
  for (const auto& m : modules_on("Z2", "Z4")) {
    const CompatiblePairs c = c_mu(m);
    CHECK(c.index_of(0, 0).has_value());
    std::size_t scan = 0;
    for (const auto& a : c.aut_h.maps) {
      for (const auto& b : c.aut_i.maps) scan += is_compatible(m, a, b);
    }
    CHECK(static_cast<std::size_t>(c.size()) == scan);
    if (m.mu == trivial_action(m.h(), m.i)) {
      CHECK(c.size() == c.aut_h.size() * c.aut_i.size());
    }
  }
  // Z2 acting on Z4 by negation, R_H = R_I = 0: every pair commutes with mu
  const FiniteGroup z2 = make_group("Z2"), z4 = make_group("Z4");
  const RBModule m = make_module(trivial_operator(z2), z4, Table(4, 0),
                                 {identity_table(4), Table{0, 3, 2, 1}});
  const CompatiblePairs c = c_mu(m);
  CHECK(c.pairs == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
}

TEST_CASE("the pair action: concrete route, action laws, Z^2 and B^2") {
  for (const char* in : {"Z2", "Z3", "Z4", "K4"}) {
    for (const auto& [m, p] : cases(in)) {
      const CompatiblePairs c = c_mu(m);
      const RBExtension e = build_abelian_extension(m, p);
      const H2 h2 = h2_rbe(m);
      for (int a = 0; a < c.size(); ++a) {
        const CocyclePair pa = act_on_pair(m, c.phi(a), c.psi(a), p);
        CHECK(twisted_cocycle(e, c.phi(a), c.psi(a)) == pa);
        CHECK(is_cocycle(m, pa));
        for (int b = 0; b < c.size(); ++b) {
          const int ab = c.group.mul(a, b);
          CHECK(act_on_pair(m, c.phi(b), c.psi(b), pa) == act_on_pair(m, c.phi(ab), c.psi(ab), p));
        }
      }
      CHECK(act_on_pair(m, c.phi(0), c.psi(0), p) == p);
      for (const auto& b : h2.b2) {
        for (int a = 0; a < c.size(); ++a) {
          const auto ba = act_on_pair(m, c.phi(a), c.psi(a), b);
          CHECK(std::binary_search(h2.b2.begin(), h2.b2.end(), ba));
        }
      }
    }
  }
}

TEST_CASE("semidirect law: ([E]^h)^c = ([E]^c)^(h^c)") {
  for (const auto& [m, p] : cases("Z4")) {
    const CompatiblePairs c = c_mu(m);
    const H2 h2 = h2_rbe(m);
    for (int a = 0; a < c.size(); ++a) {
      for (const auto& h : h2.reps) {
        const auto lhs = act_on_pair(m, c.phi(a), c.psi(a), add_pairs(m, p, h));
        const auto rhs = add_pairs(m, act_on_pair(m, c.phi(a), c.psi(a), p),
                                   act_on_pair(m, c.phi(a), c.psi(a), h));
        CHECK(h2.class_of(m, lhs) == h2.class_of(m, rhs));
      }
    }
  }
}

TEST_CASE("gamma_H does not depend on the st-section") {
  for (const char* in : {"Z2", "Z4"}) {
    for (const auto& [m, p] : cases(in)) {
      const RBExtension e = build_abelian_extension(m, p);
      const AutomorphismGroup ai = aut_i(e);
      for (const auto& gamma : ai.maps) {
        const auto ref = restriction(e, gamma, e.section.images);
        for (const auto& s : st_sections(e)) CHECK(restriction(e, gamma, s) == ref);
      }
    }
  }
}

TEST_CASE("Aut^{H,I} and Z^1 correspond through eta and zeta") {
  for (const char* in : {"Z2", "Z3", "Z4"}) {
    for (const auto& [m, p] : cases(in)) {
      const RBExtension e = build_abelian_extension(m, p);
      const auto z1 = z1_rbe(m);
      const AutomorphismGroup hi = aut_hi(e);
      CHECK(static_cast<std::size_t>(hi.size()) == z1.size());
      CHECK(eta(e, Cochain(1, 2)) == identity_table(e.e.order()));
      for (const auto& l : z1) {
        const Table g = eta(e, l);
        CHECK(hi.index_of(g).has_value());
        CHECK(zeta(e, g) == l);
        for (Elem x = 0; x < e.e.order(); ++x) CHECK(g[e.re(x)] == e.re(g[x]));
        for (const auto& l2 : z1) {
          CHECK(eta(e, pointwise_mul(m.i, l, l2)) == compose_tables(g, eta(e, l2)));
        }
      }
      for (const auto& g : hi.maps) CHECK(eta(e, zeta(e, g)) == g);
      // fiber maps from non-cocycles are not RB automorphisms
      each_cochain(1, 2, m.i.order(), [&](const Cochain& t) {
        const bool in_z1 = std::binary_search(z1.begin(), z1.end(), t);
        CHECK(hi.index_of(eta(e, t)).has_value() == in_z1);
      });
    }
  }
}

TEST_CASE("Wells sequence is exact") {
  int with_tau = 0;
  for (const char* in : {"Z2", "Z3", "Z4", "K4"}) {
    for (const auto& [m, p] : cases(in)) {
      const RBExtension e = build_abelian_extension(m, p);
      const WellsData d = compute_wells(e, m);
      const WellsReport r = check_wells_exactness(d);
      CHECK(r.exact());
      for (const auto& w : r.witnesses) MESSAGE(w.describe());
      CHECK(r.z1_order == r.autHI_order);
      CHECK(d.omega[*d.cmu.index_of(0, 0)] == 0);
      with_tau += !p.tau.is_zero();
    }
  }
  CHECK(with_tau > 0);
}

TEST_CASE("direct product: omega vanishes on Im rho") {
  for (const auto& m : modules_on("Z2", "Z4")) {
    if (m.mu != trivial_action(m.h(), m.i)) continue;
    const RBExtension e = build_abelian_extension(m, zero_pair(m));
    const WellsData d = compute_wells(e, m);
    for (int c : d.rho) CHECK(d.omega[c] == 0);
  }
}

TEST_CASE("fault injection is caught at the right joint") {
  // first extension of Z2 by Z4 whose module has nontrivial H^2, taken at a
  // non-split class so omega has room to move
  std::optional<RBExtension> pick;
  std::optional<RBModule> pm;
  for (const auto& m : modules_on("Z2", "Z4")) {
    const H2 h2 = h2_rbe(m);
    if (h2.order() < 2) continue;
    pick = build_abelian_extension(m, h2.reps.back());
    pm = m;
    break;
  }
  REQUIRE(pick.has_value());
  const RBExtension& e = *pick;
  const RBModule& m = *pm;
  const WellsData d = compute_wells(e, m);
  REQUIRE(check_wells_exactness(d).exact());
  REQUIRE(d.h2.order() > 1);

  SUBCASE("omega entry") {
    WellsData bad = d;
    const int c = bad.rho.front();  // image of the identity
    bad.omega[c] = 1;
    const auto r = check_wells_exactness(bad);
    CHECK_FALSE(r.exact_at_cmu);
    CHECK(r.exact_at_autI);
  }
  SUBCASE("omega breaks the derivation law") {
    WellsData bad = d;
    int target = -1;
    for (int c = 0; c < bad.cmu.size(); ++c) {
      if (bad.omega[c] != 0) target = c;
    }
    if (target < 0) target = bad.cmu.size() - 1;
    bad.omega[target] = (bad.omega[target] + 1) % static_cast<int>(bad.h2.order());
    CHECK_FALSE(check_wells_exactness(bad).exact());
  }
  SUBCASE("rho entry") {
    WellsData bad = d;
    bad.rho[bad.eta.back()] = bad.cmu.size() - 1;
    const auto r = check_wells_exactness(bad);
    CHECK_FALSE(r.exact_at_autI);
  }
  SUBCASE("eta entry") {
    WellsData bad = d;
    bad.eta.back() = -1;
    CHECK_FALSE(check_wells_exactness(bad).exact_at_z1);
  }
}

TEST_CASE("wells input checks") {
  const auto ms = modules_on("Z2", "Z4");
  const RBExtension e = build_abelian_extension(ms.front(), zero_pair(ms.front()));
  CHECK_THROWS_AS(compute_wells(e, ms.back()), InvalidInput);
  CHECK_THROWS_AS(act_on_pair(ms.front(), identity_table(2), Table{0, 0, 0, 0}, zero_pair(ms.front())),
                  InvalidInput);
}
