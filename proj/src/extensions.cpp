#include "rbg/extensions.hpp"

#include <atomic>
#include <thread>

#include "rbg/kernels.hpp"

namespace rbg {
namespace {

Table extension_table(const FiniteGroup& h, const FiniteGroup& i, const std::vector<Table>& mu,
                      const Cochain& tau) {
  const int ni = i.order();
  const std::size_t n = static_cast<std::size_t>(h.order()) * ni;
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem h1 = static_cast<Elem>(a / ni), y1 = static_cast<Elem>(a % ni);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem h2 = static_cast<Elem>(b / ni), y2 = static_cast<Elem>(b % ni);
      const Elem y = i.mul(i.mul(tau({h1, h2}), mu[h2][y1]), y2);
      t[a * n + b] = h.mul(h1, h2) * ni + y;
    }
  }
  return t;
}

Table extension_operator(const RotaBaxterOperator& rh, const FiniteGroup& i, const Table& ri,
                         const std::vector<Table>& mu, const Cochain& g) {
  const int ni = i.order();
  Table r(static_cast<std::size_t>(rh.group.order()) * ni);
  for (Elem h = 0; h < rh.group.order(); ++h) {
    const Elem gh = g({h});
    const Table& m = mu[rh(h)];
    for (Elem y = 0; y < ni; ++y) {
      const Elem inner = i.mul(i.mul(i.inv(gh), m[y]), gh);
      r[h * ni + y] = rh(h) * ni + i.mul(gh, ri[inner]);
    }
  }
  return r;
}

std::vector<std::string> pair_labels(const FiniteGroup& h, const FiniteGroup& i) {
  std::vector<std::string> labels;
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem y = 0; y < i.order(); ++y) labels.push_back("(" + h.label(a) + "," + i.label(y) + ")");
  }
  return labels;
}

void check_shapes(const RotaBaxterOperator& rh, const FiniteGroup& i, const Table& ri,
                  const std::vector<Table>& mu, const Cochain& tau, const Cochain& g) {
  const int hn = rh.group.order();
  bool ok = static_cast<int>(ri.size()) == i.order() && static_cast<int>(mu.size()) == hn &&
            tau.arity() == 2 && tau.h_order() == hn && g.arity() == 1 && g.h_order() == hn;
  for (const auto& m : mu) ok = ok && static_cast<int>(m.size()) == i.order();
  for (Elem v : tau.values()) ok = ok && v >= 0 && v < i.order();
  for (Elem v : g.values()) ok = ok && v >= 0 && v < i.order();
  if (!ok) throw InvalidInput("extension data has inconsistent shapes");
}

}  // namespace

std::optional<Witness> extension_violation(const RotaBaxterOperator& rh, const FiniteGroup& i,
                                           const Table& ri, const std::vector<Table>& mu,
                                           const Cochain& tau, const Cochain& g) {
  check_shapes(rh, i, ri, mu, tau, g);
  const std::size_t n = static_cast<std::size_t>(rh.group.order()) * i.order();
  const Table t = extension_table(rh.group, i, mu, tau);
  if (auto w = group_axiom_violation(t, n)) return Witness{"group law: " + w->law, w->at};
  const FiniteGroup e = FiniteGroup::from_table(t, n);
  return rb_violation(e, extension_operator(rh, i, ri, mu, g));
}

RBExtension build_extension(const RotaBaxterOperator& rh, const FiniteGroup& i, const Table& ri,
                            const std::vector<Table>& mu, const Cochain& tau, const Cochain& g) {
  check_shapes(rh, i, ri, mu, tau, g);
  const FiniteGroup& h = rh.group;
  const std::size_t n = static_cast<std::size_t>(h.order()) * i.order();
  Table t = extension_table(h, i, mu, tau);
  if (auto w = group_axiom_violation(t, n)) throw LawViolation({"group law: " + w->law, w->at});
  RBExtension x{rh, i, ri, mu, tau, g, {}, {}, {}, {}, {}};
  x.e = FiniteGroup::from_table(std::move(t), n, pair_labels(h, i));
  x.re = make_rb_operator(x.e, extension_operator(rh, i, ri, mu, g));
  x.include = GroupMap{i, x.e, Table(i.order())};
  for (Elem y = 0; y < i.order(); ++y) x.include.images[y] = x.at(0, y);
  x.project = GroupMap{x.e, h, Table(n)};
  for (Elem a = 0; a < static_cast<Elem>(n); ++a) x.project.images[a] = x.base(a);
  x.section = GroupMap{h, x.e, Table(h.order())};
  for (Elem a = 0; a < h.order(); ++a) x.section.images[a] = x.at(a, 0);
  return x;
}

RBExtension build_abelian_extension(const RBModule& m, const CocyclePair& p) {
  if (auto w = cocycle_violation(m, p)) throw LawViolation(*w);
  return build_extension(m.rh, m.i, m.ri, m.mu, p.tau, p.g);
}

std::optional<Witness> section_violation(const RBExtension& e, const Table& s) {
  if (static_cast<int>(s.size()) != e.h().order()) return Witness{"section shape", {}};
  if (s[0] != 0) return Witness{"section s(e) = e", {0}};
  for (Elem h = 0; h < e.h().order(); ++h) {
    if (s[h] < 0 || s[h] >= e.e.order() || e.base(s[h]) != h) return Witness{"section pi s = id", {h}};
  }
  return std::nullopt;
}

std::vector<Table> st_sections(const RBExtension& e) {
  std::vector<Table> out;
  const int hn = e.h().order();
  const int in = e.i.order();
  std::vector<Elem> theta(hn, 0);
  for (;;) {
    Table s(hn);
    for (Elem h = 0; h < hn; ++h) s[h] = e.at(h, theta[h]);
    out.push_back(std::move(s));
    int k = hn - 1;
    while (k >= 1 && ++theta[k] == in) theta[k--] = 0;
    if (k < 1) break;
  }
  return out;
}

CocyclePair extract_cocycle(const RBExtension& e, const Table& s) {
  if (auto w = section_violation(e, s)) throw InvalidInput("not an st-section: " + w->describe());
  const auto& E = e.e;
  const int hn = e.h().order();
  CocyclePair p{Cochain(2, hn), Cochain(1, hn)};
  for (Elem h1 = 1; h1 < hn; ++h1) {
    for (Elem h2 = 1; h2 < hn; ++h2) {
      const Elem x = E.ldiv(s[e.h().mul(h1, h2)], E.mul(s[h1], s[h2]));
      p.tau.set({h1, h2}, e.fiber(x));
    }
    const Elem y = E.ldiv(s[e.rh(h1)], e.re(s[h1]));
    p.g.set({h1}, e.fiber(y));
  }
  return p;
}

std::vector<Table> extract_action(const RBExtension& e, const Table& s) {
  if (auto w = section_violation(e, s)) throw InvalidInput("not an st-section: " + w->describe());
  std::vector<Table> mu(e.h().order(), Table(e.i.order()));
  for (Elem h = 0; h < e.h().order(); ++h) {
    for (Elem y = 0; y < e.i.order(); ++y) {
      mu[h][y] = e.fiber(e.e.ldiv(s[h], e.e.mul(e.include(y), s[h])));
    }
  }
  return mu;
}

Table fiber_map(const RBExtension& e, const Cochain& theta) {
  Table f(e.e.order());
  for (Elem x = 0; x < e.e.order(); ++x) {
    f[x] = e.at(e.base(x), e.i.mul(theta({e.base(x)}), e.fiber(x)));
  }
  return f;
}

std::optional<Cochain> are_equivalent(const RBExtension& e1, const RBExtension& e2) {
  if (e1.e.order() != e2.e.order() || e1.i.order() != e2.i.order()) return std::nullopt;
  const int hn = e1.h().order();
  Cochain theta(1, hn);
  auto& v = theta.values();
  for (;;) {
    const Table f = fiber_map(e1, theta);
    bool ok = !kernels::first_hom_violation(e1.e.table().data(), e1.e.order(),
                                            e2.e.table().data(), e2.e.order(), f.data());
    for (Elem x = 0; x < e1.e.order() && ok; ++x) ok = f[e1.re(x)] == e2.re(f[x]);
    if (ok) return theta;
    std::size_t k = v.size();
    while (k > 0 && ++v[k - 1] == e1.i.order()) v[--k] = 0;
    if (k == 0) return std::nullopt;
  }
}

Classification classify_abelian(const RBModule& m, const Limits& limits) {
  const H2 h2 = h2_rbe(m, limits);
  std::vector<std::optional<RBExtension>> built(h2.z2.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < built.size(); k = next++) {
      built[k] = build_abelian_extension(m, h2.z2[k]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, limits.workers); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Classification c;
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < built.size(); ++k) {
    int cls = -1;
    for (std::size_t r = 0; r < reps.size() && cls < 0; ++r) {
      if (are_equivalent(*built[k], *built[reps[r]])) cls = static_cast<int>(r);
    }
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(k);
      c.class_representatives.push_back(h2.z2[k]);
    }
    c.class_of.push_back(cls);
  }
  c.num_classes = reps.size();
  c.h2_order = h2.order();
  c.match = c.num_classes == c.h2_order;
  return c;
}

RBExtension build_split_extension(const RotaBaxterOperator& rh, const RotaBaxterOperator& ri,
                                  const std::vector<Table>& mu, const Cochain& g) {
  const FiniteGroup& h = rh.group;
  const FiniteGroup& i = ri.group;
  if (static_cast<int>(mu.size()) != h.order()) throw InvalidInput("split extension: action shape");
  for (Elem x = 0; x < h.order(); ++x) {
    GroupMap f{i, i, mu[x]};
    if (!is_bijective(f) || !is_homomorphism(f)) {
      throw InvalidInput("split extension: mu_h is not an automorphism at h = " + std::to_string(x));
    }
  }
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      if (mu[h.mul(a, b)] != compose_tables(mu[b], mu[a])) {
        throw InvalidInput("split extension: mu is not an anti-homomorphism");
      }
    }
  }
  const Cochain tau(2, h.order());
  if (auto w = extension_violation(rh, i, ri.images, mu, tau, g)) throw LawViolation(*w);
  return build_extension(rh, i, ri.images, mu, tau, g);
}

bool section_is_homomorphism(const RBExtension& e, const Table& s) {
  return is_homomorphism(GroupMap{e.h(), e.e, s});
}

std::optional<Table> homomorphic_section(const RBExtension& e) {
  for (const Table& s : st_sections(e)) {
    if (section_is_homomorphism(e, s)) return s;
  }
  return std::nullopt;
}

}  // namespace rbg
