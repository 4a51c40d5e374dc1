#include "rbg/kernels.hpp"

#ifdef RBG_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <bit>

#define RBG_AVX2 __attribute__((target("avx2")))

namespace rbg::kernels::avx2 {
namespace {

// Lanes where a != b, as a bitmask (lane 0 in bit 0).
RBG_AVX2 inline unsigned mismatch(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi32(a, b);
  return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xffu;
}

RBG_AVX2 inline __m256i load(const Elem* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

RBG_AVX2 inline __m256i gather(const Elem* base, __m256i idx) {
  return _mm256_i32gather_epi32(base, idx, 4);
}

}  // namespace

RBG_AVX2 std::optional<Triple> first_assoc_violation(const Elem* t, int n) {
  for (int a = 0; a < n; ++a) {
    const __m256i a_off = _mm256_set1_epi32(a * n);
    for (int b = 0; b < n; ++b) {
      const Elem* ab_row = t + t[a * n + b] * n;
      const Elem* b_row = t + b * n;
      int c = 0;
      for (; c + 8 <= n; c += 8) {
        const __m256i lhs = load(ab_row + c);
        const __m256i rhs = gather(t, _mm256_add_epi32(a_off, load(b_row + c)));
        if (unsigned m = mismatch(lhs, rhs)) return Triple{a, b, c + std::countr_zero(m)};
      }
      for (; c < n; ++c) {
        if (ab_row[c] != t[a * n + b_row[c]]) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

RBG_AVX2 std::optional<Pair> first_rb_violation(const Elem* t, const Elem* inv, const Elem* r,
                                                int n) {
  const __m256i nn = _mm256_set1_epi32(n);
  for (int x = 0; x < n; ++x) {
    const Elem rx = r[x];
    const Elem* xr_row = t + t[x * n + rx] * n;
    const Elem rx_inv = inv[rx];
    const __m256i rx_off = _mm256_set1_epi32(rx * n);
    const __m256i rinv = _mm256_set1_epi32(rx_inv);
    int y = 0;
    for (; y + 8 <= n; y += 8) {
      const __m256i lhs = gather(t, _mm256_add_epi32(rx_off, load(r + y)));
      const __m256i xry = load(xr_row + y);
      const __m256i arg = gather(t, _mm256_add_epi32(_mm256_mullo_epi32(xry, nn), rinv));
      const __m256i rhs = gather(r, arg);
      if (unsigned m = mismatch(lhs, rhs)) return Pair{x, y + std::countr_zero(m)};
    }
    for (; y < n; ++y) {
      if (t[rx * n + r[y]] != r[t[xr_row[y] * n + rx_inv]]) return Pair{x, y};
    }
  }
  return std::nullopt;
}

RBG_AVX2 std::optional<Triple> first_brace_violation(const Elem* add, const Elem* add_inv,
                                                     const Elem* circ, int n) {
  for (int a = 0; a < n; ++a) {
    const Elem* circ_a = circ + a * n;
    const __m256i a_off = _mm256_set1_epi32(a * n);
    for (int b = 0; b < n; ++b) {
      const Elem* add_b = add + b * n;
      const Elem s = add[circ_a[b] * n + add_inv[a]];
      const __m256i s_off = _mm256_set1_epi32(s * n);
      int c = 0;
      for (; c + 8 <= n; c += 8) {
        const __m256i lhs = gather(circ, _mm256_add_epi32(a_off, load(add_b + c)));
        const __m256i rhs = gather(add, _mm256_add_epi32(s_off, load(circ_a + c)));
        if (unsigned m = mismatch(lhs, rhs)) return Triple{a, b, c + std::countr_zero(m)};
      }
      for (; c < n; ++c) {
        if (circ_a[add_b[c]] != add[s * n + circ_a[c]]) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

RBG_AVX2 std::optional<Pair> first_hom_violation(const Elem* dom, int n, const Elem* cod, int m,
                                                 const Elem* f) {
  for (int a = 0; a < n; ++a) {
    const Elem* a_row = dom + a * n;
    const Elem fa = f[a];
    const __m256i fa_off = _mm256_set1_epi32(fa * m);
    int b = 0;
    for (; b + 8 <= n; b += 8) {
      const __m256i lhs = gather(f, load(a_row + b));
      const __m256i rhs = gather(cod, _mm256_add_epi32(fa_off, load(f + b)));
      if (unsigned k = mismatch(lhs, rhs)) return Pair{a, b + std::countr_zero(k)};
    }
    for (; b < n; ++b) {
      if (f[a_row[b]] != cod[fa * m + f[b]]) return Pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace rbg::kernels::avx2

#endif
