// Acceptance suite: one PASS/FAIL line per criterion.
//   rbg_acceptance                 run all
//   rbg_acceptance --criterion N   run one (exit status reflects it)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "rbg/catalog.hpp"
#include "rbg/cohomology.hpp"
#include "rbg/extensions.hpp"
#include "rbg/io.hpp"
#include "rbg/triplets.hpp"
#include "rbg/wells.hpp"

using namespace rbg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::set<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok && failures.insert(what).second) {
      pass = false;
      detail << " | FAILED: " << what;
    }
  }
};

RotaBaxterOperator fixture(const std::string& name) {
  return operator_from_json(read_json_file(std::string(RBG_FIXTURES) + "/operators/" + name + ".json"));
}

std::vector<Table> images_of(const std::vector<RotaBaxterOperator>& ops) {
  std::vector<Table> out;
  for (const auto& r : ops) out.push_back(r.images);
  return out;
}

bool contains(const std::vector<Table>& all, const Table& t) {
  return std::find(all.begin(), all.end(), t) != all.end();
}

void enumeration(Outcome& o, const char* group, std::size_t expected,
                 const std::vector<std::string>& listed, bool listed_is_complete) {
  const FiniteGroup g = make_group(group);
  const auto found = images_of(enumerate_rb_operators(g));
  o.detail << group << ": " << found.size() << " operators (expected " << expected << ")";
  o.require(found.size() == expected, std::string("count for ") + group);
  std::vector<Table> want;
  for (const auto& name : listed) {
    const Table t = fixture(name).images;
    o.require(contains(found, t), name + " listed operator present");
    want.push_back(t);
  }
  o.detail << ", listed operators found: " << listed.size();
  if (listed_is_complete) {
    want.push_back(trivial_operator(g).images);
    std::sort(want.begin(), want.end());
    o.require(want == found, "nontrivial operators equal the listing");
  }
}

void c1(Outcome& o) {
  enumeration(o, "S3", 8, {"S3_R1", "S3_R2", "S3_R3", "S3_R4", "S3_R5", "S3_R6", "S3_R7"}, true);
}
void c2(Outcome& o) { enumeration(o, "D4", 52, {"D4_R1", "D4_R2", "D4_R3"}, false); }
void c3(Outcome& o) { enumeration(o, "Q8", 8, {"Q8_R1", "Q8_R2"}, false); }

void c4(Outcome& o) {
  std::size_t n = 0;
  for (const char* g : {"S3", "D4", "Q8"}) {
    for (const auto& r : enumerate_rb_operators(make_group(g))) {
      auto w = skew_brace_violation(induced_skew_brace(r));
      o.require(!w, std::string("brace on ") + g + (w ? " at " + w->describe() : ""));
      ++n;
    }
  }
  o.detail << n << " induced braces checked";
}

void c5(Outcome& o) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z6"}) {
    const FiniteGroup g = make_group(name);
    const auto ops = images_of(enumerate_rb_operators(g));
    const auto ends = endomorphisms(g);
    o.detail << name << ": " << ops.size() << "/" << ends.size() << " ";
    o.require(ops == ends, std::string("operators equal endomorphisms on ") + name);
  }
}

// --- criterion 6 ------------------------------------------------------------

template <class F>
void each_cochain(int arity, int h_order, int i_order, F&& fn) {
  Cochain c(arity, h_order);
  auto& v = c.values();
  for (;;) {
    fn(c);
    std::size_t k = v.size();
    while (k > 0 && ++v[k - 1] == i_order) v[--k] = 0;
    if (k == 0) return;
  }
}

double space_size(int arity, int h, int i) {
  return std::pow(static_cast<double>(i), static_cast<double>(Cochain::slots(arity, h)));
}

// every cochain if the space has at most 2^12 elements, else every cochain
// with one nonzero entry (the maps are additive, so this is still exact)
std::vector<Cochain> test_cochains(int arity, int h, int i) {
  std::vector<Cochain> out;
  if (space_size(arity, h, i) <= (1 << 12)) {
    each_cochain(arity, h, i, [&](const Cochain& c) { out.push_back(c); });
    return out;
  }
  out.emplace_back(arity, h);
  for (std::size_t s = 0; s < Cochain::slots(arity, h); ++s) {
    for (Elem v = 1; v < i; ++v) {
      Cochain c(arity, h);
      c.values()[s] = v;
      out.push_back(c);
    }
  }
  return out;
}

Cochain random_cochain(std::mt19937& rng, int arity, int h, int i) {
  Cochain c(arity, h);
  std::uniform_int_distribution<Elem> d(0, i - 1);
  for (auto& v : c.values()) v = d(rng);
  return c;
}

bool zero_rb(const RBCochain& x) { return x.f.is_zero() && x.g.is_zero() && x.h.is_zero(); }

// All admissible sigma for partial_circ on m.
std::vector<std::vector<Table>> all_sigmas(const RBModule& m) {
  std::vector<std::vector<Table>> out;
  for (auto& s : all_actions(m.circle, m.i)) {
    if (!sigma_violation(m, s)) out.push_back(std::move(s));
  }
  return out;
}

struct ComplexCounts {
  std::size_t modules = 0, checks = 0, failures = 0;
};

void check_module(const RBModule& m, const std::function<std::vector<Cochain>(int)>& source,
                  ComplexCounts& k, std::mt19937* rng) {
  const int h = m.h().order(), i = m.i.order();
  auto ok = [&](bool b) {
    ++k.checks;
    if (!b) ++k.failures;
  };
  const auto sigmas = all_sigmas(m);
  const bool rb_aut = action_commutes_with_ri(m);
  for (int arity : {1, 2, 3}) {
    for (const auto& f : source(arity)) {
      ok(delta(m, delta(m, f)).is_zero());
      ok(partial(m, partial(m, f)).is_zero());
      for (const auto& s : sigmas) ok(partial_circ(m, partial_circ(m, f, s), s).is_zero());
    }
  }
  // RB double complexes, degree 1 -> 3 and 2 -> 4
  std::vector<RBCochain> xs;
  const auto c1s = source(1);
  if (rng) {
    for (std::size_t k2 = 0; k2 < c1s.size(); ++k2) {
      xs.push_back({1, c1s[k2], random_cochain(*rng, 1, h, i), Cochain(1, h)});
    }
  } else {
    for (const auto& f : c1s) {
      for (const auto& g : c1s) xs.push_back({1, f, g, Cochain(1, h)});
    }
  }
  for (const auto& f : source(2)) xs.push_back({2, f, Cochain(1, h), Cochain(2, h)});
  for (const auto& g : c1s) xs.push_back({2, Cochain(2, h), g, Cochain(2, h)});
  for (const auto& c : source(2)) xs.push_back({2, Cochain(2, h), Cochain(1, h), c});
  for (const auto& x : xs) {
    if (rb_aut) ok(zero_rb(delta_rb(m, delta_rb(m, x))));
    for (const auto& s : sigmas) ok(zero_rb(partial_rb(m, partial_rb(m, x, s), s)));
  }
  // RBE complex, degree 1 -> 2
  for (const auto& t : c1s) {
    auto [a, b] = d2_rbe(m, d1_rbe(m, t));
    ok(a.is_zero() && b.is_zero());
  }
  ++k.modules;
}

void c6(Outcome& o) {
  ComplexCounts small, large;
  for (const char* h : {"Z1", "Z2", "Z3"}) {
    for (const char* in : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2"}) {
      for (const auto& m : all_modules(make_group(h), make_group(in))) {
        const int hn = m.h().order(), i = m.i.order();
        check_module(m, [&](int arity) { return test_cochains(arity, hn, i); }, small, nullptr);
      }
    }
  }
  std::mt19937 rng(20240611);
  for (const char* h : {"Z4", "Z2xZ2"}) {
    for (const char* in : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
      for (const auto& m : all_modules(make_group(h), make_group(in))) {
        const int hn = m.h().order(), i = m.i.order();
        auto source = [&](int arity) {
          std::vector<Cochain> out;
          for (int k = 0; k < 10; ++k) out.push_back(random_cochain(rng, arity, hn, i));
          return out;
        };
        check_module(m, source, large, &rng);
      }
    }
  }
  o.detail << "|H|<=3: " << small.modules << " modules, " << small.checks << " checks; |H|=4: "
           << large.modules << " modules, " << large.checks << " checks";
  o.require(small.failures == 0, std::to_string(small.failures) + " small-instance failures");
  o.require(large.failures == 0, std::to_string(large.failures) + " randomized failures");
  o.require(large.modules > 0 && large.checks >= 100, "randomized coverage");
}

// --- criteria 7, 8 -----------------------------------------------------------

std::vector<RBModule> roundtrip_modules() {
  std::vector<RBModule> out;
  for (const char* in : {"Z2", "Z4"}) {
    for (auto& m : all_modules(make_group("Z2"), make_group(in))) out.push_back(std::move(m));
  }
  return out;
}

void c7(Outcome& o) {
  std::size_t n = 0, nontrivial = 0;
  for (const auto& m : roundtrip_modules()) {
    nontrivial += m.mu != trivial_action(m.h(), m.i);
    for (const auto& p : z2_rbe(m)) {
      const RBExtension e = build_abelian_extension(m, p);
      o.require(is_rb_operator(e.e, e.re.images), "built extension verifies");
      o.require(extract_cocycle(e, e.section.images) == p, "extract returns (tau, g)");
      ++n;
    }
  }
  o.detail << n << " cocycles over " << roundtrip_modules().size() << " modules (" << nontrivial
           << " with nontrivial action)";
  o.require(nontrivial > 0, "nontrivial actions covered");
}

void c8(Outcome& o) {
  std::size_t n = 0;
  for (const auto& m : roundtrip_modules()) {
    const Classification c = classify_abelian(m);
    const auto z2 = z2_rbe(m);
    const auto b2 = b2_rbe(m);
    const bool divides = !b2.empty() && z2.size() % b2.size() == 0;
    o.require(divides && c.num_classes == z2.size() / b2.size(),
              "classes " + std::to_string(c.num_classes) + " vs |Z2|/|B2| = " +
                  std::to_string(z2.size()) + "/" + std::to_string(b2.size()));
    ++n;
  }
  o.detail << n << " instances";
}

void c9(Outcome& o) {
  std::size_t n = 0, modules = 0;
  for (const char* h : {"Z1", "Z2", "Z3"}) {
    for (const char* in : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2"}) {
      const FiniteGroup hg = make_group(h), ig = make_group(in);
      for (const auto& m : all_modules(hg, ig)) {
        if (m.mu != trivial_action(hg, ig)) continue;
        ++modules;
        each_cochain(1, hg.order(), ig.order(), [&](const Cochain& t) {
          o.require(partial(m, phi1(m, t)) == phi2(m, delta(m, t)), "identity at a cochain");
          ++n;
        });
      }
    }
  }
  o.detail << n << " cochains over " << modules << " trivial-action modules";
}

// --- criterion 10 ------------------------------------------------------------

void c10(Outcome& o) {
  const FiniteGroup z2 = make_group("Z2"), z4 = make_group("Z4");
  struct Desk {
    const char* name;
    RBModule m;
    CocyclePair p;
  };
  std::vector<Desk> desks;
  const auto rh = make_rb_operator(z2, identity_table(2));
  {
    const RBModule m = make_module(rh, z4, Table(4, 0), trivial_action(z2, z4));
    desks.push_back({"Z2 x Z4 (direct product)", m, zero_pair(m)});
    CocyclePair p = zero_pair(m);
    p.tau.set({1, 1}, 2);
    p.g.set({1}, 1);
    desks.push_back({"tau(1,1)=2, g(1)=1", m, p});
  }
  {
    const RBModule m = make_module(trivial_operator(z2), z4, Table(4, 0),
                                   {identity_table(4), Table{0, 3, 2, 1}});
    CocyclePair p = zero_pair(m);
    p.tau.set({1, 1}, 2);
    if (is_cocycle(m, p)) desks.push_back({"Z4 by negation, tau(1,1)=2", m, p});
  }
  for (const auto& d : desks) {
    const RBExtension e = build_abelian_extension(d.m, d.p);
    const WellsReport r = check_wells_exactness(compute_wells(e, d.m));
    o.detail << "[" << d.name << ": |Z1|=" << r.z1_order << " |Aut^HI|=" << r.autHI_order
             << " |Aut_I|=" << r.autI_order << " |C_mu|=" << r.cmu_order << " |H2|=" << r.h2_order
             << "] ";
    o.require(r.z1_order == r.autHI_order && r.exact_at_z1 && r.exact_at_autI,
              std::string(d.name) + ": Aut^{H,I} = Z^1");
    o.require(r.exact_at_cmu && r.omega_well_defined, std::string(d.name) + ": Im rho = Ker omega");
    o.require(r.omega_is_derivation, std::string(d.name) + ": derivation law");
  }
  o.require(desks.size() >= 2 && !desks[1].p.tau.is_zero(), "desk instances present");
}

// --- criterion 11 ------------------------------------------------------------

void c11(Outcome& o) {
  const FiniteGroup z2 = make_group("Z2"), d4 = make_group("D4");
  const auto out = outer_automorphisms(d4);
  const auto z = center(d4);
  std::size_t pairs = 0, triplets = 0, classes = 0, acted = 0;
  for (const auto& rh : enumerate_rb_operators(z2)) {
    for (const auto& ri : enumerate_rb_operators(d4)) {
      const bool keeps_center = std::all_of(z.begin(), z.end(), [&](Elem c) {
        return std::binary_search(z.begin(), z.end(), ri(c));
      });
      if (!keeps_center) continue;
      const TripletCensus census = h2_alpha(rh, ri, trivial_coupling(z2, out), out);
      for (const auto& t : census.triplets) {
        o.require(!triplet_violation(t, rh, ri), "census triplet verifies");
      }
      ++pairs;
      triplets += census.triplets.size();
      classes += census.num_classes();
      if (census.triplets.empty()) continue;
      const CentralAction a = central_action(rh, ri, census);
      acted += a.h2.order() > 1;
      o.require(a.all_valid && a.well_defined, "action well defined");
      o.require(a.identity_trivial, "identity acts trivially");
      o.require(a.free, "action is free");
    }
  }
  o.detail << pairs << " (R_H, R_I) pairs, " << triplets << " triplets in " << classes
           << " classes, " << acted << " censuses with nontrivial H^2(H, Z(I))";
  o.require(acted > 0, "some nontrivial central classes");
}

struct Criterion {
  const char* title;
  double seconds;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {"S3 enumeration", 1, c1},
    {"D4 enumeration", 30, c2},
    {"Q8 enumeration", 30, c3},
    {"brace induction", 5, c4},
    {"abelian groups: operators = endomorphisms", 60, c5},
    {"d o d = 0", 60, c6},
    {"build/extract roundtrip", 60, c7},
    {"classes = |Z2|/|B2|", 60, c8},
    {"central identity", 60, c9},
    {"Wells exactness", 120, c10},
    {"non-abelian triplets", 120, c11},
};

bool run(int k) {
  const Criterion& c = kCriteria[k - 1];
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < c.seconds, "time budget");
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k, c.title,
              o.detail.str().c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr int n = sizeof(kCriteria) / sizeof(kCriteria[0]);
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const int k = std::atoi(argv[2]);
    if (k < 1 || k > n) {
      std::fprintf(stderr, "criterion must be 1..%d\n", n);
      return 2;
    }
    return run(k) ? 0 : 1;
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  int failed = 0;
  for (int k = 1; k <= n; ++k) failed += !run(k);
  return failed ? 1 : 0;
}
