#include "rbg/kernels.hpp"

#include <atomic>

namespace rbg::kernels {
namespace {

bool detect_avx2() {
#ifdef RBG_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

// -1: no override; otherwise the forced Isa value.
std::atomic<int> forced{-1};

bool use_avx2() { return active_isa() == Isa::avx2; }

}  // namespace

bool avx2_available() {
  static const bool ok = detect_avx2();
  return ok;
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f == static_cast<int>(Isa::scalar)) return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

#ifdef RBG_HAVE_AVX2_KERNELS
#define RBG_DISPATCH(fn, ...) \
  (use_avx2() ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define RBG_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::optional<Triple> first_assoc_violation(const Elem* t, int n) {
  return RBG_DISPATCH(first_assoc_violation, t, n);
}

std::optional<Pair> first_rb_violation(const Elem* t, const Elem* inv, const Elem* r, int n) {
  return RBG_DISPATCH(first_rb_violation, t, inv, r, n);
}

std::optional<Triple> first_brace_violation(const Elem* add, const Elem* add_inv,
                                            const Elem* circ, int n) {
  return RBG_DISPATCH(first_brace_violation, add, add_inv, circ, n);
}

std::optional<Pair> first_hom_violation(const Elem* dom, int n, const Elem* cod, int m,
                                        const Elem* f) {
  return RBG_DISPATCH(first_hom_violation, dom, n, cod, m, f);
}

}  // namespace rbg::kernels
