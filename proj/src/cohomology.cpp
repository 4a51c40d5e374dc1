#include "rbg/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace rbg {
namespace {

template <class Mul, class Act>
Cochain coboundary(const FiniteGroup& i, const Cochain& f, Mul mul, Act act) {
  const int n = f.arity();
  Cochain out(n + 1, f.h_order());
  std::vector<Elem> args(n);
  std::vector<Elem> t(n + 1, 1);  // odometer over non-degenerate tuples
  const Elem top = static_cast<Elem>(f.h_order() - 1);
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (s > 0) {
      int k = n;
      while (t[k] == top) t[k--] = 1;
      ++t[k];
    }
    const std::span<const Elem> ts(t);
    Elem acc = f(ts.subspan(1));
    for (int k = 1; k <= n; ++k) {
      int o = 0;
      for (int j = 0; j < k - 1; ++j) args[o++] = t[j];
      args[o++] = mul(t[k - 1], t[k]);
      for (int j = k + 1; j <= n; ++j) args[o++] = t[j];
      const Elem v = f(args);
      acc = i.mul(acc, k % 2 ? i.inv(v) : v);
    }
    const Elem last = act(f(ts.first(n)), t[n]);
    acc = i.mul(acc, (n + 1) % 2 ? i.inv(last) : last);
    out.values()[s] = acc;
  }
  return out;
}

// Every normalized cochain of the given arity, in lexicographic order.
template <class F>
void for_each_cochain(int arity, int h_order, int i_order, F&& fn) {
  Cochain c(arity, h_order);
  auto& v = c.values();
  for (;;) {
    fn(c);
    std::size_t k = v.size();
    while (k > 0 && ++v[k - 1] == i_order) v[--k] = 0;
    if (k == 0) return;
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

void check_budget(std::uint64_t candidates, const Limits& limits, const char* what) {
  if (candidates > limits.cochain_budget) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(candidates) +
                         " candidates exceed the budget of " +
                         std::to_string(limits.cochain_budget));
  }
}

// The g-dependent part of beta.
Cochain beta_linear(const RBModule& m, const Cochain& g) {
  const auto& i = m.i;
  Cochain out = partial(m, g);
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto t = out.tuple(s);
    const Elem g1 = g({t[0]});
    const Elem inner = i.ldiv(g1, m.act(g1, t[1]));
    const Elem corr = m.ri[m.act(inner, m.rh(t[1]))];
    out.values()[s] = i.ldiv(corr, out.values()[s]);
  }
  return out;
}

}  // namespace

CocyclePair zero_pair(const RBModule& m) {
  return {Cochain(2, m.h().order()), Cochain(1, m.h().order())};
}

CocyclePair add_pairs(const RBModule& m, const CocyclePair& a, const CocyclePair& b) {
  return {pointwise_mul(m.i, a.tau, b.tau), pointwise_mul(m.i, a.g, b.g)};
}

CocyclePair sub_pairs(const RBModule& m, const CocyclePair& a, const CocyclePair& b) {
  return {pointwise_sub(m.i, a.tau, b.tau), pointwise_sub(m.i, a.g, b.g)};
}

Cochain delta(const RBModule& m, const Cochain& f) {
  return coboundary(
      m.i, f, [&](Elem a, Elem b) { return m.h().mul(a, b); },
      [&](Elem y, Elem h) { return m.act(y, h); });
}

Cochain partial(const RBModule& m, const Cochain& f) {
  return coboundary(
      m.i, f, [&](Elem a, Elem b) { return m.circle.mul(a, b); },
      [&](Elem y, Elem h) { return m.act(y, m.rh(h)); });
}

std::optional<Witness> sigma_violation(const RBModule& m, const std::vector<Table>& sigma) {
  const auto& c = m.circle;
  if (static_cast<int>(sigma.size()) != c.order()) return Witness{"sigma shape", {}};
  for (Elem h = 0; h < c.order(); ++h) {
    GroupMap f{m.i, m.i, sigma[h]};
    if (static_cast<int>(sigma[h].size()) != m.i.order() || !is_bijective(f) ||
        !is_homomorphism(f)) {
      return Witness{"sigma_h automorphism", {h}};
    }
  }
  for (Elem a = 0; a < c.order(); ++a) {
    for (Elem b = 0; b < c.order(); ++b) {
      const Table& ab = sigma[c.mul(a, b)];
      for (Elem y = 0; y < m.i.order(); ++y) {
        if (ab[y] != sigma[b][sigma[a][y]]) return Witness{"sigma anti-homomorphism", {a, b, y}};
      }
    }
  }
  for (Elem h = 0; h < c.order(); ++h) {
    for (Elem y = 0; y < m.i.order(); ++y) {
      if (m.ri[sigma[h][y]] != m.act(m.ri[y], m.rh(h))) return Witness{"sigma intertwining", {h, y}};
    }
  }
  return std::nullopt;
}

Cochain partial_circ(const RBModule& m, const Cochain& f, const std::vector<Table>& sigma) {
  if (auto w = sigma_violation(m, sigma)) throw LawViolation(*w);
  return coboundary(
      m.i, f, [&](Elem a, Elem b) { return m.circle.mul(a, b); },
      [&](Elem y, Elem h) { return sigma[h][y]; });
}

namespace {

template <class ThirdCoboundary>
RBCochain rb_coboundary(const RBModule& m, const RBCochain& x, ThirdCoboundary&& d3) {
  const int n = x.degree;
  const auto& i = m.i;
  if (x.f.arity() != n || x.g.arity() != (n == 1 ? 1 : n - 1) || (n >= 2 && x.h.arity() != n)) {
    throw InvalidInput("RB cochain: arity mismatch");
  }
  RBCochain out;
  out.degree = n + 1;
  out.f = delta(m, x.f);
  const Cochain fbar = precompose(m.rh.images, x.f);
  if (n == 1) {
    out.g = pointwise_sub(i, fbar, apply_map(m.ri, x.g));
    out.h = d3(x.g);
  } else {
    Cochain t = pointwise_sub(i, fbar, apply_map(m.ri, x.h));
    if (n % 2 == 0) t = pointwise_inv(i, t);  // (-1)^{n+1}
    out.g = pointwise_mul(i, partial(m, x.g), t);
    out.h = d3(x.h);
  }
  return out;
}

}  // namespace

RBCochain delta_rb(const RBModule& m, const RBCochain& x) {
  return rb_coboundary(m, x, [&](const Cochain& c) { return partial(m, c); });
}

RBCochain partial_rb(const RBModule& m, const RBCochain& x, const std::vector<Table>& sigma) {
  if (auto w = sigma_violation(m, sigma)) throw LawViolation(*w);
  return rb_coboundary(m, x, [&](const Cochain& c) { return partial_circ(m, c, sigma); });
}

Cochain phi1(const RBModule& m, const Cochain& theta) {
  Cochain out(1, theta.h_order());
  for (Elem h = 1; h < m.h().order(); ++h) {
    const Elem r = m.rh(h);
    out.set({h}, m.i.ldiv(theta({r}), m.ri[m.act(theta({h}), r)]));
  }
  return out;
}

Cochain phi2(const RBModule& m, const Cochain& f) {
  const auto& h = m.h();
  const auto& i = m.i;
  Cochain out(2, f.h_order());
  for (Elem h1 = 1; h1 < h.order(); ++h1) {
    for (Elem h2 = 1; h2 < h.order(); ++h2) {
      const Elem r1 = m.rh(h1);
      const Elem r2 = m.rh(h2);
      const Elem r1i = h.inv(r1);
      Elem x = f({h.mul(h1, r1), h.mul(h2, r1i)});
      x = i.mul(x, m.act(f({h1, r1}), h.mul(h2, r1i)));
      x = i.mul(x, f({h2, r1i}));
      x = i.mul(x, i.inv(f({r1, r1i})));
      const Elem twisted = m.ri[m.act(x, m.rh(m.circle.mul(h1, h2)))];
      out.set({h1, h2}, i.ldiv(f({r1, r2}), twisted));
    }
  }
  return out;
}

CocyclePair d1_rbe(const RBModule& m, const Cochain& theta) {
  return {delta(m, theta), phi1(m, theta)};
}

std::pair<Cochain, Cochain> d2_rbe(const RBModule& m, const CocyclePair& p) {
  return {delta(m, p.tau), pointwise_sub(m.i, beta_linear(m, p.g), phi2(m, p.tau))};
}

std::optional<Witness> cocycle_violation(const RBModule& m, const CocyclePair& p) {
  auto [d, beta] = d2_rbe(m, p);
  for (std::size_t s = 0; s < d.size(); ++s) {
    if (d.values()[s] != 0) return Witness{"delta2", d.tuple(s)};
  }
  for (std::size_t s = 0; s < beta.size(); ++s) {
    if (beta.values()[s] != 0) return Witness{"beta", beta.tuple(s)};
  }
  return std::nullopt;
}

bool is_cocycle(const RBModule& m, const CocyclePair& p) { return !cocycle_violation(m, p); }

std::uint64_t z2_candidates(const RBModule& m) {
  const std::size_t k = m.h().order() - 1;
  return saturating_pow(m.i.order(), k * k + k);
}

std::vector<Cochain> z1_rbe(const RBModule& m, const Limits& limits) {
  const int hn = m.h().order();
  check_budget(saturating_pow(m.i.order(), hn - 1), limits, "Z^1");
  std::vector<Cochain> out;
  for_each_cochain(1, hn, m.i.order(), [&](const Cochain& t) {
    if (delta(m, t).is_zero() && phi1(m, t).is_zero()) out.push_back(t);
  });
  return out;
}

std::vector<CocyclePair> z2_rbe(const RBModule& m, const Limits& limits) {
  const int hn = m.h().order();
  const int in = m.i.order();
  check_budget(z2_candidates(m), limits, "Z^2");
  // beta = L(g) - Phi2(tau): tabulate L over all g once.
  std::vector<Cochain> gs;
  std::vector<Cochain> lg;
  for_each_cochain(1, hn, in, [&](const Cochain& g) {
    gs.push_back(g);
    lg.push_back(beta_linear(m, g));
  });
  std::vector<Cochain> taus;
  for_each_cochain(2, hn, in, [&](const Cochain& t) {
    if (delta(m, t).is_zero()) taus.push_back(t);
  });
  std::vector<std::vector<CocyclePair>> found(taus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < taus.size(); k = next++) {
      const Cochain target = phi2(m, taus[k]);
      for (std::size_t j = 0; j < gs.size(); ++j) {
        if (lg[j] == target) found[k].push_back({taus[k], gs[j]});
      }
    }
  };
  const unsigned w = std::max(1u, limits.workers);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < w; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CocyclePair> out;
  for (auto& f : found) {
    for (auto& p : f) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CocyclePair> b2_rbe(const RBModule& m, const Limits& limits) {
  const int hn = m.h().order();
  check_budget(saturating_pow(m.i.order(), hn - 1), limits, "B^2");
  std::vector<CocyclePair> out;
  for_each_cochain(1, hn, m.i.order(), [&](const Cochain& t) { out.push_back(d1_rbe(m, t)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CocyclePair H2::canonical(const RBModule& m, const CocyclePair& p) const {
  CocyclePair best = add_pairs(m, p, b2.front());
  for (const auto& b : b2) best = std::min(best, add_pairs(m, p, b));
  return best;
}

int H2::class_of(const RBModule& m, const CocyclePair& p) const {
  const CocyclePair c = canonical(m, p);
  auto it = std::lower_bound(reps.begin(), reps.end(), c);
  if (it == reps.end() || *it != c) throw InvalidInput("class_of: pair is not a cocycle");
  return static_cast<int>(it - reps.begin());
}

H2 h2_rbe(const RBModule& m, const Limits& limits) {
  H2 out;
  out.z2 = z2_rbe(m, limits);
  out.b2 = b2_rbe(m, limits);
  std::vector<char> done(out.z2.size(), 0);
  for (std::size_t k = 0; k < out.z2.size(); ++k) {
    if (done[k]) continue;
    out.reps.push_back(out.z2[k]);
    for (const auto& b : out.b2) {
      auto it = std::lower_bound(out.z2.begin(), out.z2.end(), add_pairs(m, out.z2[k], b));
      if (it == out.z2.end() || *it != add_pairs(m, out.z2[k], b)) {
        throw Error("internal: B^2 is not contained in Z^2");
      }
      done[it - out.z2.begin()] = 1;
    }
  }
  return out;
}

}  // namespace rbg
