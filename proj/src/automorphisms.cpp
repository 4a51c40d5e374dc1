#include "rbg/automorphisms.hpp"

#include <algorithm>
#include <map>

namespace rbg {
namespace {

void check_bound(const FiniteGroup& g, const Limits& limits) {
  if (static_cast<std::size_t>(g.order()) > limits.max_order) {
    throw BudgetExceeded("group order " + std::to_string(g.order()) +
                         " exceeds the automorphism search bound " +
                         std::to_string(limits.max_order));
  }
}

// Every element as a word: parent[x] and gen[x] with x = parent[x] * gens[gen[x]],
// listed in BFS order from the identity.
struct Spanning {
  std::vector<Elem> order;
  std::vector<Elem> parent;
  std::vector<int> gen;
};

Spanning spanning_tree(const FiniteGroup& g, const std::vector<Elem>& gens) {
  Spanning s;
  s.parent.assign(g.order(), -1);
  s.gen.assign(g.order(), -1);
  s.order.push_back(0);
  s.parent[0] = 0;
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = g.mul(s.order[i], gens[k]);
      if (s.parent[y] < 0) {
        s.parent[y] = s.order[i];
        s.gen[y] = static_cast<int>(k);
        s.order.push_back(y);
      }
    }
  }
  return s;
}

}  // namespace

std::optional<int> AutomorphismGroup::index_of(const Table& f) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || *it != f) return std::nullopt;
  return static_cast<int>(it - maps.begin());
}

std::vector<Table> homomorphisms(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  check_bound(g, limits);
  check_bound(h, limits);
  const std::vector<Elem> gens = generating_set(g);
  const Spanning tree = spanning_tree(g, gens);
  // candidate images: order must divide the generator's order
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Elem y = 0; y < h.order(); ++y) {
      if (g.elem_order(gens[k]) % h.elem_order(y) == 0) cand[k].push_back(y);
    }
  }
  std::vector<Table> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  Table f(g.order());
  for (;;) {
    if (std::any_of(cand.begin(), cand.end(), [](const auto& c) { return c.empty(); })) break;
    // extend along the tree, then check every generator edge
    f[0] = 0;
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
      Elem x = tree.order[i];
      f[x] = h.mul(f[tree.parent[x]], cand[tree.gen[x]][pick[tree.gen[x]]]);
    }
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x) {
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        ok = f[g.mul(x, gens[k])] == h.mul(f[x], cand[k][pick[k]]);
      }
    }
    if (ok) out.push_back(f);
    std::size_t k = 0;
    while (k < gens.size() && ++pick[k] == cand[k].size()) pick[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Table> endomorphisms(const FiniteGroup& g, const Limits& limits) {
  return homomorphisms(g, g, limits);
}

AutomorphismGroup automorphism_subgroup(const FiniteGroup& base, std::vector<Table> maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  const std::size_t k = maps.size();
  if (k == 0 || maps[0] != identity_table(base.order())) {
    throw InvalidInput("automorphism set does not contain the identity");
  }
  std::map<Table, Elem> pos;
  for (std::size_t i = 0; i < k; ++i) pos[maps[i]] = static_cast<Elem>(i);
  Table table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto it = pos.find(compose_tables(maps[i], maps[j]));
      if (it == pos.end()) throw InvalidInput("automorphism set not closed under composition");
      table[i * k + j] = it->second;
    }
  }
  AutomorphismGroup a{base, std::move(maps), FiniteGroup::from_table(std::move(table), k)};
  return a;
}

AutomorphismGroup automorphisms(const FiniteGroup& g, const Limits& limits) {
  std::vector<Table> auts;
  for (auto& f : endomorphisms(g, limits)) {
    if (is_bijective(GroupMap{g, g, f})) auts.push_back(std::move(f));
  }
  return automorphism_subgroup(g, std::move(auts));
}

std::vector<Elem> inner_automorphisms(const AutomorphismGroup& aut) {
  std::vector<Elem> out;
  for (Elem x = 0; x < aut.base.order(); ++x) {
    auto i = aut.index_of(inner_automorphism(aut.base, x).images);
    if (!i) throw Error("inner automorphism missing from automorphism list");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rbg
