#pragma once

// Exhaustive law scans over flat int32 Cayley tables. Each scan reports the
// first violation in lexicographic order of its arguments, so the scalar and
// AVX2 variants return identical results.

#include <array>
#include <optional>

#include "rbg/error.hpp"

namespace rbg::kernels {

using Pair = std::array<Elem, 2>;
using Triple = std::array<Elem, 3>;

enum class Isa { scalar, avx2 };

// (a b) c != a (b c)
std::optional<Triple> first_assoc_violation(const Elem* t, int n);
// R(x) R(y) != R(x R(x) y R(x)^-1)
std::optional<Pair> first_rb_violation(const Elem* t, const Elem* inv, const Elem* r, int n);
// a o (b + c) != a o b - a + a o c
std::optional<Triple> first_brace_violation(const Elem* add, const Elem* add_inv,
                                            const Elem* circ, int n);
// f(a b) != f(a) f(b), for f from a group of order n to one of order m
std::optional<Pair> first_hom_violation(const Elem* dom, int n, const Elem* cod, int m,
                                        const Elem* f);

Isa active_isa();
bool avx2_available();
// Test hook: pin the dispatcher to one implementation. Requesting avx2 on a
// machine without it falls back to scalar.
void force_isa(std::optional<Isa> isa);

namespace scalar {
std::optional<Triple> first_assoc_violation(const Elem* t, int n);
std::optional<Pair> first_rb_violation(const Elem* t, const Elem* inv, const Elem* r, int n);
std::optional<Triple> first_brace_violation(const Elem* add, const Elem* add_inv,
                                            const Elem* circ, int n);
std::optional<Pair> first_hom_violation(const Elem* dom, int n, const Elem* cod, int m,
                                        const Elem* f);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define RBG_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::optional<Triple> first_assoc_violation(const Elem* t, int n);
std::optional<Pair> first_rb_violation(const Elem* t, const Elem* inv, const Elem* r, int n);
std::optional<Triple> first_brace_violation(const Elem* add, const Elem* add_inv,
                                            const Elem* circ, int n);
std::optional<Pair> first_hom_violation(const Elem* dom, int n, const Elem* cod, int m,
                                        const Elem* f);
}  // namespace avx2
#endif

}  // namespace rbg::kernels
