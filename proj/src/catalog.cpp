#include "rbg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "rbg/io.hpp"

namespace rbg {
namespace {

std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int perm_order(const Perm& p) {
  int o = 1;
  for (const auto& c : cycles_of(p)) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

int parse_int(std::string_view s, std::size_t& i) {
  int v = 0;
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
  if (i == start) throw InvalidInput("expected a number in '" + std::string(s) + "'");
  return v;
}

}  // namespace

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm parse_cycles(std::string_view s, int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  if (s == "e" || s == "()") return p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw InvalidInput("bad cycle notation '" + std::string(s) + "'");
    ++i;
    std::vector<int> c;
    for (;;) {
      skip_ws();
      int v = parse_int(s, i);
      if (v < 1 || v > degree) throw InvalidInput("point out of range in '" + std::string(s) + "'");
      c.push_back(v - 1);
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw InvalidInput("bad cycle notation '" + std::string(s) + "'");
    }
    // apply this cycle after the ones already read
    Perm cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) cyc[c[k]] = c[(k + 1) % c.size()];
    p = perm_mul(p, cyc);
    skip_ws();
  }
  return p;
}

std::string cycle_notation(const Perm& p) {
  auto cs = cycles_of(p);
  if (cs.empty()) return "e";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
    s += ')';
  }
  return s;
}

FiniteGroup permutation_group(const std::vector<Perm>& gens, int degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> seen{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm q = perm_mul(elems[i], g);
      if (seen.emplace(q, 1).second) elems.push_back(std::move(q));
    }
  }
  std::sort(elems.begin(), elems.end(), [](const Perm& a, const Perm& b) {
    const int oa = perm_order(a);
    const int ob = perm_order(b);
    if (oa != ob) return oa < ob;
    return cycles_of(a) < cycles_of(b);
  });
  const std::size_t n = elems.size();
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index[elems[i]] = static_cast<Elem>(i);
  Table table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = cycle_notation(elems[a]);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(perm_mul(elems[a], elems[b]));
  }
  return FiniteGroup::from_table(std::move(table), n, std::move(labels));
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  Table t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(t), n);
}

FiniteGroup dihedral(int n) {
  if (n < 3) throw InvalidInput("dihedral group D_n needs n >= 3");
  Perm rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = n - 1 - i;
  }
  return permutation_group({rot, refl}, n);
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 5) throw InvalidInput("symmetric group S_n supported for 1 <= n <= 5");
  if (n == 1) return FiniteGroup{};
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return permutation_group({parse_cycles("(1,2)", n), cyc}, n);
}

FiniteGroup quaternion8() {
  return permutation_group(
      {parse_cycles("(1,2,3,4)(5,6,7,8)", 8), parse_cycles("(1,5,3,7)(2,8,4,6)", 8)}, 8);
}

namespace {

FiniteGroup make_factor(std::string_view d) {
  auto number = [&](std::size_t from) {
    std::size_t i = from;
    int v = parse_int(d, i);
    if (i != d.size()) throw InvalidInput("unknown group descriptor '" + std::string(d) + "'");
    return v;
  };
  if (d == "Q8") return quaternion8();
  if (d == "K4" || d == "V4") return direct_product(cyclic(2), cyclic(2));
  if (d.size() >= 2 && (d[0] == 'Z' || d[0] == 'C')) return cyclic(number(1));
  if (d.size() >= 2 && d[0] == 'D') return dihedral(number(1));
  if (d.size() >= 2 && d[0] == 'S') return symmetric(number(1));
  throw InvalidInput("unknown group descriptor '" + std::string(d) + "'");
}

}  // namespace

FiniteGroup make_group(std::string_view descriptor, const Limits& limits) {
  FiniteGroup g;
  if (descriptor.ends_with(".json")) {
    g = load_group(std::string(descriptor));
  } else {
    std::size_t start = 0;
    bool first = true;
    while (start <= descriptor.size()) {
      std::size_t end = descriptor.find('x', start);
      if (end == std::string_view::npos) end = descriptor.size();
      FiniteGroup f = make_factor(descriptor.substr(start, end - start));
      g = first ? f : direct_product(g, f);
      first = false;
      start = end + 1;
    }
  }
  if (static_cast<std::size_t>(g.order()) > limits.max_order) {
    throw BudgetExceeded("group order " + std::to_string(g.order()) + " exceeds bound " +
                         std::to_string(limits.max_order));
  }
  return g;
}

}  // namespace rbg
