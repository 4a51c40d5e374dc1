#include "rbg/rota_baxter.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rbg/kernels.hpp"

namespace rbg {

std::optional<Witness> rb_violation(const FiniteGroup& g, const Table& images) {
  if (static_cast<int>(images.size()) != g.order()) return Witness{"operator shape", {}};
  for (Elem v : images) {
    if (v < 0 || v >= g.order()) return Witness{"operator range", {v}};
  }
  if (auto v = kernels::first_rb_violation(g.table().data(), g.inverses().data(), images.data(),
                                           g.order())) {
    return Witness{"Rota-Baxter law", {(*v)[0], (*v)[1]}};
  }
  return std::nullopt;
}

bool is_rb_operator(const FiniteGroup& g, const Table& images) { return !rb_violation(g, images); }

RotaBaxterOperator make_rb_operator(const FiniteGroup& g, Table images) {
  if (auto w = rb_violation(g, images)) throw LawViolation(*w);
  return {g, std::move(images)};
}

RotaBaxterOperator trivial_operator(const FiniteGroup& g) { return {g, Table(g.order(), 0)}; }

RotaBaxterOperator inversion_operator(const FiniteGroup& g) { return {g, g.inverses()}; }

namespace {

// Depth-first search for RB operators with R(x) restricted to allowed[x].
// Each assignment propagates: once R(x) and R(y) are known, R at
// x R(x) y R(x)^-1 is forced to equal R(x) R(y).
class RbSearch {
 public:
  RbSearch(const FiniteGroup& g, const std::vector<std::vector<char>>& allowed)
      : g_(g), n_(g.order()), allowed_(allowed), r_(n_, -1) {}

  // Pins R(0) = 0 (forced by the RB law at x = y = e) and, if given,
  // R(first) = value. Returns false when that already conflicts.
  bool start(std::optional<std::pair<Elem, Elem>> fixed) {
    if (!assign(0, 0)) return false;
    if (fixed && r_[fixed->first] < 0) return assign(fixed->first, fixed->second);
    if (fixed) return r_[fixed->first] == fixed->second;
    return true;
  }

  template <class F>
  bool dfs(F& on_solution) {
    Elem x = 0;
    while (x < n_ && r_[x] >= 0) ++x;
    if (x == n_) return on_solution(r_);
    for (Elem v = 0; v < n_; ++v) {
      if (!allowed_[x][v]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, v) && !dfs(on_solution)) return false;
      undo(mark);
    }
    return true;
  }

 private:
  bool set(Elem x, Elem v) {
    if (r_[x] >= 0) return r_[x] == v;
    if (!allowed_[x][v]) return false;
    r_[x] = v;
    trail_.push_back(x);
    queue_.push_back(x);
    return true;
  }

  bool check(Elem x, Elem y) {
    const Elem rx = r_[x];
    const Elem arg = g_.mul(g_.mul(g_.mul(x, rx), y), g_.inv(rx));
    return set(arg, g_.mul(rx, r_[y]));
  }

  bool assign(Elem x, Elem v) {
    queue_.clear();
    if (!set(x, v)) return false;
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const Elem k = queue_[q];
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        const Elem j = trail_[i];
        if (!check(k, j) || !check(j, k)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      r_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  const FiniteGroup& g_;
  int n_;
  const std::vector<std::vector<char>>& allowed_;
  Table r_;
  std::vector<Elem> trail_;
  std::vector<Elem> queue_;
};

void check_enum_bound(const FiniteGroup& g, const Limits& limits) {
  if (static_cast<std::size_t>(g.order()) > limits.max_enum_order) {
    throw BudgetExceeded("group order " + std::to_string(g.order()) +
                         " exceeds the enumeration bound " + std::to_string(limits.max_enum_order));
  }
}

// Runs the search split by the value of R(1), in parallel, collecting every
// solution. With first_only each subtree stops at its first solution and the
// least of those is returned, so the answer does not depend on scheduling.
std::vector<Table> run_search(const FiniteGroup& g, const std::vector<std::vector<char>>& allowed,
                              unsigned workers, bool first_only) {
  const int n = g.order();
  if (n == 1) {
    return allowed[0][0] ? std::vector<Table>{Table{0}} : std::vector<Table>{};
  }
  std::vector<std::vector<Table>> by_value(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int v = next++; v < n; v = next++) {
      if (!allowed[1][v]) continue;
      RbSearch s(g, allowed);
      if (!s.start(std::make_pair(Elem{1}, Elem(v)))) continue;
      auto on_solution = [&](const Table& r) {
        by_value[v].push_back(r);
        return !first_only;
      };
      s.dfs(on_solution);
    }
  };
  const unsigned w = std::max(1u, std::min<unsigned>(workers, n));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < w; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<Table> out;
  for (auto& b : by_value) {
    for (auto& r : b) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  if (first_only && out.size() > 1) out.resize(1);
  return out;
}

}  // namespace

std::optional<std::string> enumeration_warning(const FiniteGroup& g, const Limits& limits) {
  if (static_cast<std::size_t>(g.order()) > limits.warn_enum_order) {
    return "enumerating RB operators on a group of order " + std::to_string(g.order()) +
           " may be slow";
  }
  return std::nullopt;
}

std::vector<RotaBaxterOperator> enumerate_rb_operators(const FiniteGroup& g, const Limits& limits) {
  check_enum_bound(g, limits);
  const std::vector<std::vector<char>> allowed(g.order(), std::vector<char>(g.order(), 1));
  std::vector<RotaBaxterOperator> out;
  for (auto& r : run_search(g, allowed, limits.workers, false)) {
    if (auto w = rb_violation(g, r)) throw Error("internal: search produced a non-RB map");
    out.push_back({g, std::move(r)});
  }
  return out;
}

FiniteGroup induced_circle_group(const RotaBaxterOperator& r) {
  const auto& g = r.group;
  const int n = g.order();
  Table t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (Elem x = 0; x < n; ++x) {
    if (g.has_labels()) labels.push_back(g.label(x));
    for (Elem y = 0; y < n; ++y) t[x * n + y] = g.mul(g.mul(g.mul(x, r(x)), y), g.inv(r(x)));
  }
  return FiniteGroup::from_table(std::move(t), n, std::move(labels));
}

SkewBrace induced_skew_brace(const RotaBaxterOperator& r) {
  return {r.group.order(), r.group.table(), induced_circle_group(r).table()};
}

std::optional<Witness> skew_brace_violation(const SkewBrace& s) {
  const std::size_t n = s.order;
  if (auto w = group_axiom_violation(s.add, n)) return Witness{"additive group: " + w->law, w->at};
  if (auto w = group_axiom_violation(s.circ, n)) return Witness{"circle group: " + w->law, w->at};
  Table add_inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (s.add[a * n + b] == 0) add_inv[a] = static_cast<Elem>(b);
    }
  }
  if (auto v = kernels::first_brace_violation(s.add.data(), add_inv.data(), s.circ.data(),
                                              static_cast<int>(n))) {
    return Witness{"brace compatibility", {(*v)[0], (*v)[1], (*v)[2]}};
  }
  return std::nullopt;
}

bool is_skew_brace(const SkewBrace& s) { return !skew_brace_violation(s); }

std::optional<Witness> rb_morphism_violation(const GroupMap& f, const RotaBaxterOperator& source,
                                             const RotaBaxterOperator& target) {
  if (f.domain.order() != source.group.order() || f.codomain.order() != target.group.order()) {
    throw InvalidInput("RB morphism: map does not match the operators' groups");
  }
  if (auto w = homomorphism_violation(f)) {
    throw InvalidInput("RB morphism: map is not a homomorphism (" + w->describe() + ")");
  }
  for (Elem h = 0; h < f.domain.order(); ++h) {
    if (f(source(h)) != target(f(h))) return Witness{"RB morphism intertwining", {h}};
  }
  return std::nullopt;
}

bool is_rb_morphism(const GroupMap& f, const RotaBaxterOperator& source,
                    const RotaBaxterOperator& target) {
  return !rb_morphism_violation(f, source, target);
}

bool is_rb_subgroup(const RotaBaxterOperator& r, std::span<const Elem> h) {
  if (!is_subgroup(r.group, h)) throw InvalidInput("RB subgroup: set is not a subgroup");
  std::vector<char> in(r.group.order(), 0);
  for (Elem x : h) in[x] = 1;
  return std::all_of(h.begin(), h.end(), [&](Elem x) { return in[r(x)] != 0; });
}

std::optional<RotaBaxterOperator> find_rb_inducing_brace(const SkewBrace& s, const Limits& limits) {
  if (auto w = skew_brace_violation(s)) throw LawViolation(*w);
  FiniteGroup g = FiniteGroup::from_table(s.add, s.order);
  check_enum_bound(g, limits);
  const int n = g.order();
  // R(x) must conjugate every y to x^-1 (x o y).
  std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
  for (Elem x = 0; x < n; ++x) {
    for (Elem r = 0; r < n; ++r) {
      bool ok = true;
      for (Elem y = 0; y < n && ok; ++y) ok = g.conj(r, y) == g.ldiv(x, s.circ[x * n + y]);
      allowed[x][r] = ok;
    }
  }
  auto found = run_search(g, allowed, limits.workers, true);
  if (found.empty()) return std::nullopt;
  return RotaBaxterOperator{g, std::move(found.front())};
}

}  // namespace rbg
