#include "rbg/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rbg/kernels.hpp"

namespace rbg {

std::string Witness::describe() const {
  std::ostringstream os;
  os << law << " fails at (";
  for (std::size_t i = 0; i < at.size(); ++i) os << (i ? "," : "") << at[i];
  os << ")";
  return os.str();
}

LawViolation::LawViolation(Witness w) : Error(w.describe()), witness_(std::move(w)) {}

std::optional<Witness> group_axiom_violation(const Table& table, std::size_t n) {
  if (n == 0) return Witness{"non-empty carrier", {}};
  if (table.size() != n * n) return Witness{"table shape", {}};
  const int ni = static_cast<int>(n);
  for (int i = 0; i < ni * ni; ++i) {
    if (table[i] < 0 || table[i] >= ni) return Witness{"closure", {i / ni, i % ni}};
  }
  for (int a = 0; a < ni; ++a) {
    if (table[a] != a || table[a * ni] != a) return Witness{"identity", {a}};
  }
  for (int a = 0; a < ni; ++a) {
    const Elem* row = table.data() + a * ni;
    auto it = std::find(row, row + ni, 0);
    if (it == row + ni || table[(it - row) * ni + a] != 0) return Witness{"inverse", {a}};
  }
  if (auto v = kernels::first_assoc_violation(table.data(), ni)) {
    return Witness{"associativity", {(*v)[0], (*v)[1], (*v)[2]}};
  }
  return std::nullopt;
}

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->table = {0};
  d->inverse = {0};
  d->elem_order = {1};
  d_ = std::move(d);
  n_ = 1;
}

FiniteGroup FiniteGroup::from_table(Table table, std::size_t n, std::vector<std::string> labels) {
  if (auto w = group_axiom_violation(table, n)) throw LawViolation(*w);
  if (!labels.empty() && labels.size() != n) throw InvalidInput("label count does not match order");
  const int ni = static_cast<int>(n);
  auto d = std::make_shared<Data>();
  d->inverse.resize(n);
  d->elem_order.resize(n);
  for (int a = 0; a < ni; ++a) {
    const Elem* row = table.data() + a * ni;
    d->inverse[a] = static_cast<Elem>(std::find(row, row + ni, 0) - row);
    int k = 1;
    for (Elem p = a; p != 0; p = table[p * ni + a]) ++k;
    d->elem_order[a] = k;
    for (int b = 0; b < a && d->abelian; ++b) {
      if (table[a * ni + b] != table[b * ni + a]) d->abelian = false;
    }
  }
  d->table = std::move(table);
  d->labels = std::move(labels);
  FiniteGroup g;
  g.d_ = std::move(d);
  g.n_ = ni;
  return g;
}

Elem FiniteGroup::pow(Elem a, long k) const {
  const int o = elem_order(a);
  long e = ((k % o) + o) % o;
  Elem r = 0;
  while (e-- > 0) r = mul(r, a);
  return r;
}

std::string FiniteGroup::label(Elem a) const {
  return d_->labels.empty() ? std::to_string(a) : d_->labels[a];
}

std::optional<Elem> FiniteGroup::find_label(std::string_view s) const {
  for (int a = 0; a < n_; ++a) {
    if (label(a) == s) return a;
  }
  return std::nullopt;
}

GroupMap identity_map(const FiniteGroup& g) { return {g, g, identity_table(g.order())}; }

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (inner.codomain.order() != outer.domain.order()) throw InvalidInput("compose: shape mismatch");
  GroupMap r{inner.domain, outer.codomain, Table(inner.images.size())};
  for (std::size_t i = 0; i < inner.images.size(); ++i) r.images[i] = outer.images[inner.images[i]];
  return r;
}

std::optional<Witness> homomorphism_violation(const GroupMap& f) {
  const auto& d = f.domain;
  const auto& c = f.codomain;
  if (auto v = kernels::first_hom_violation(d.table().data(), d.order(), c.table().data(),
                                            c.order(), f.images.data())) {
    return Witness{"homomorphism", {(*v)[0], (*v)[1]}};
  }
  return std::nullopt;
}

std::optional<Witness> anti_homomorphism_violation(const GroupMap& f) {
  const auto& d = f.domain;
  const auto& c = f.codomain;
  for (Elem a = 0; a < d.order(); ++a) {
    for (Elem b = 0; b < d.order(); ++b) {
      if (f(d.mul(a, b)) != c.mul(f(b), f(a))) return Witness{"anti-homomorphism", {a, b}};
    }
  }
  return std::nullopt;
}

bool is_homomorphism(const GroupMap& f) { return !homomorphism_violation(f); }
bool is_anti_homomorphism(const GroupMap& f) { return !anti_homomorphism_violation(f); }

bool is_bijective(const GroupMap& f) {
  if (f.domain.order() != f.codomain.order()) return false;
  std::vector<char> seen(f.codomain.order(), 0);
  for (Elem y : f.images) {
    if (seen[y]++) return false;
  }
  return true;
}

Table compose_tables(const Table& outer, const Table& inner) {
  Table r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Table invert_table(const Table& f) {
  Table r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<Elem>(i);
  return r;
}

Table identity_table(int n) {
  Table r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<Elem> sub{0};
  while (static_cast<int>(sub.size()) < g.order()) {
    Elem best = -1;
    std::size_t best_size = 0;
    for (Elem x = 1; x < g.order(); ++x) {
      if (std::binary_search(sub.begin(), sub.end(), x)) continue;
      auto trial = gens;
      trial.push_back(x);
      std::size_t s = generated_subgroup(g, trial).size();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    sub = generated_subgroup(g, gens);
  }
  return gens;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> s) {
  if (s.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  for (Elem a : s) {
    for (Elem b : s) {
      if (!in[g.mul(a, g.inv(b))]) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Elem> s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y : s) {
      if (!in[g.conj(x, y)]) return false;
    }
  }
  return true;
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

GroupMap inner_automorphism(const FiniteGroup& g, Elem x) {
  GroupMap f{g, g, Table(g.order())};
  for (Elem y = 0; y < g.order(); ++y) f.images[y] = g.conj(x, y);
  return f;
}

Quotient quotient(const FiniteGroup& g, std::span<const Elem> normal) {
  if (!is_normal_subgroup(g, normal)) throw InvalidInput("quotient: subgroup is not normal");
  const int n = g.order();
  std::vector<Elem> coset(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : normal) coset[g.mul(x, k)] = idx;
  }
  const std::size_t q = reps.size();
  Table table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Elem r : reps) labels.push_back(g.label(r) + "N");
  }
  Quotient out{FiniteGroup::from_table(std::move(table), q, std::move(labels)), {}, reps};
  out.projection = GroupMap{g, out.group, coset};
  return out;
}

Subgroup subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
  if (!is_subgroup(g, elems)) throw InvalidInput("subgroup: not closed");
  std::vector<Elem> s(elems.begin(), elems.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const std::size_t k = s.size();
  std::vector<Elem> pos(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[s[i]] = static_cast<Elem>(i);
  Table table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = pos[g.mul(s[i], s[j])];
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Elem x : s) labels.push_back(g.label(x));
  }
  Subgroup out{FiniteGroup::from_table(std::move(table), k, std::move(labels)), {}};
  out.embedding = GroupMap{out.group, g, s};
  return out;
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  const std::size_t n = static_cast<std::size_t>(n1) * n2;
  Table table(n * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < static_cast<int>(n); ++a) {
    labels[a] = "(" + g1.label(a / n2) + "," + g2.label(a % n2) + ")";
    for (int b = 0; b < static_cast<int>(n); ++b) {
      table[a * n + b] = g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
    }
  }
  return FiniteGroup::from_table(std::move(table), n, std::move(labels));
}

}  // namespace rbg
