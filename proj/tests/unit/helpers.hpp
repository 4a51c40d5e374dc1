#pragma once

#include <random>
#include <vector>

#include "rbg/catalog.hpp"
#include "rbg/cohomology.hpp"
#include "rbg/module.hpp"

namespace rbg::testing {

inline Cochain random_cochain(std::mt19937& rng, int arity, int h_order, int i_order) {
  Cochain c(arity, h_order);
  std::uniform_int_distribution<Elem> d(0, i_order - 1);
  for (auto& v : c.values()) v = d(rng);
  return c;
}

// Calls fn on every normalized cochain of the given shape.
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

// Cochains with a single nonzero entry (all values), plus the zero cochain.
inline std::vector<Cochain> basis_cochains(int arity, int h_order, int i_order) {
  std::vector<Cochain> out{Cochain(arity, h_order)};
  for (std::size_t s = 0; s < Cochain::slots(arity, h_order); ++s) {
    for (Elem v = 1; v < i_order; ++v) {
      Cochain c(arity, h_order);
      c.values()[s] = v;
      out.push_back(c);
    }
  }
  return out;
}

// Every module on (H, I) for the small descriptor lists used across tests.
inline std::vector<RBModule> modules_on(const char* h, const char* i) {
  return all_modules(make_group(h), make_group(i));
}

// sigma_h = mu_{R_H h} when that is admissible.
inline std::optional<std::vector<Table>> natural_sigma(const RBModule& m) {
  std::vector<Table> s;
  for (Elem h = 0; h < m.h().order(); ++h) s.push_back(m.mu[m.rh(h)]);
  if (sigma_violation(m, s)) return std::nullopt;
  return s;
}

}  // namespace rbg::testing
