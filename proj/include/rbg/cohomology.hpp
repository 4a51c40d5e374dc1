#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbg/cochain.hpp"
#include "rbg/module.hpp"

namespace rbg {

// Sign conventions. The coboundaries are the normalized ones,
//   (d f)(h1..h_{n+1}) = f(h2..) + sum_k (-1)^k f(..h_k*h_{k+1}..)
//                        + (-1)^{n+1} f(h1..hn).h_{n+1},
// with * and the action depending on the complex:
//   delta:        (H, .)  acting by mu_h
//   partial:      (H, o)  acting by mu_{R_H(h)}
//   partial_circ: (H, o)  acting by a supplied sigma_h.
// The RBE complex uses
//   Phi1(t)(h)      = R_I(mu_{R_H h} t(h)) - t(R_H h)
//   Phi2(f)(h1, h2) = R_I(mu_{R_H(h1 o h2)}( f(h1 r1, h2 r1^-1) + mu_{h2 r1^-1} f(h1, r1)
//                       + f(h2, r1^-1) - f(r1, r1^-1) )) - f(r1, r2),   r_k = R_H(h_k)
//   d1_RBE(t)       = (delta t, Phi1 t)
//   d2_RBE(tau, g)  = (delta tau, beta),
//   beta(h1, h2)    = partial(g)(h1, h2) - R_I(mu_{R_H h2}(mu_{h2} g(h1) - g(h1))) - Phi2(tau)(h1, h2).
// With these signs d2 o d1 = 0, the kernel of d2 is exactly the data of an RB
// extension (see extensions.hpp), and partial Phi1 = Phi2 delta for trivial mu.

struct CocyclePair {
  Cochain tau;  // arity 2
  Cochain g;    // arity 1

  friend bool operator==(const CocyclePair&, const CocyclePair&) = default;
  friend auto operator<=>(const CocyclePair& a, const CocyclePair& b) {
    if (auto c = a.tau <=> b.tau; c != 0) return c;
    return a.g <=> b.g;
  }
};

CocyclePair zero_pair(const RBModule& m);
CocyclePair add_pairs(const RBModule& m, const CocyclePair& a, const CocyclePair& b);
CocyclePair sub_pairs(const RBModule& m, const CocyclePair& a, const CocyclePair& b);

Cochain delta(const RBModule& m, const Cochain& f);
Cochain partial(const RBModule& m, const Cochain& f);

// sigma must be an anti-homomorphism (H, o) -> Aut(I) with
// R_I sigma_h = mu_{R_H h} R_I.
std::optional<Witness> sigma_violation(const RBModule& m, const std::vector<Table>& sigma);
Cochain partial_circ(const RBModule& m, const Cochain& f, const std::vector<Table>& sigma);

// Element of C^n_RB: degree 1 is the pair (f, g) of 1-cochains (h unused);
// degree n >= 2 is (f, g, h) of arities (n, n-1, n).
struct RBCochain {
  int degree = 1;
  Cochain f, g, h;
  friend bool operator==(const RBCochain&, const RBCochain&) = default;
};

// degree 1: (delta f, fbar - R_I g, d g); degree n: (delta f, partial g +
// (-1)^{n+1} (fbar - R_I h), d h), with d = partial for delta_rb and
// d = partial_circ for partial_rb.
// A differential only when action_commutes_with_ri(m).
RBCochain delta_rb(const RBModule& m, const RBCochain& x);
RBCochain partial_rb(const RBModule& m, const RBCochain& x, const std::vector<Table>& sigma);

Cochain phi1(const RBModule& m, const Cochain& theta);
Cochain phi2(const RBModule& m, const Cochain& f);

CocyclePair d1_rbe(const RBModule& m, const Cochain& theta);
std::pair<Cochain, Cochain> d2_rbe(const RBModule& m, const CocyclePair& p);

// First failing tuple of delta(tau) = 0 ("delta2") or beta = 0 ("beta").
std::optional<Witness> cocycle_violation(const RBModule& m, const CocyclePair& p);
bool is_cocycle(const RBModule& m, const CocyclePair& p);

// Number of candidates a brute-force Z^2 scan would visit (saturating).
std::uint64_t z2_candidates(const RBModule& m);

std::vector<Cochain> z1_rbe(const RBModule& m, const Limits& limits = {});
std::vector<CocyclePair> z2_rbe(const RBModule& m, const Limits& limits = {});
std::vector<CocyclePair> b2_rbe(const RBModule& m, const Limits& limits = {});

struct H2 {
  std::vector<CocyclePair> z2;    // sorted
  std::vector<CocyclePair> b2;    // sorted
  std::vector<CocyclePair> reps;  // least element of each coset, sorted
  std::size_t order() const { return reps.size(); }

  // Least member of p + B^2.
  CocyclePair canonical(const RBModule& m, const CocyclePair& p) const;
  // Index into reps of the class of p (p must be a cocycle).
  int class_of(const RBModule& m, const CocyclePair& p) const;
};

H2 h2_rbe(const RBModule& m, const Limits& limits = {});

}  // namespace rbg
