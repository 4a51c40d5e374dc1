#include "rbg/kernels.hpp"

namespace rbg::kernels::scalar {

std::optional<Triple> first_assoc_violation(const Elem* t, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Elem* ab_row = t + t[a * n + b] * n;
      const Elem* b_row = t + b * n;
      const Elem* a_row = t + a * n;
      for (int c = 0; c < n; ++c) {
        if (ab_row[c] != a_row[b_row[c]]) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<Pair> first_rb_violation(const Elem* t, const Elem* inv, const Elem* r, int n) {
  for (int x = 0; x < n; ++x) {
    const Elem rx = r[x];
    const Elem* xr_row = t + t[x * n + rx] * n;
    const Elem* rx_row = t + rx * n;
    const Elem rx_inv = inv[rx];
    for (int y = 0; y < n; ++y) {
      const Elem lhs = rx_row[r[y]];
      const Elem arg = t[xr_row[y] * n + rx_inv];
      if (lhs != r[arg]) return Pair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<Triple> first_brace_violation(const Elem* add, const Elem* add_inv,
                                            const Elem* circ, int n) {
  for (int a = 0; a < n; ++a) {
    const Elem* circ_a = circ + a * n;
    for (int b = 0; b < n; ++b) {
      const Elem* add_b = add + b * n;
      const Elem* base = add + add[circ_a[b] * n + add_inv[a]] * n;
      for (int c = 0; c < n; ++c) {
        if (circ_a[add_b[c]] != base[circ_a[c]]) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<Pair> first_hom_violation(const Elem* dom, int n, const Elem* cod, int m,
                                        const Elem* f) {
  for (int a = 0; a < n; ++a) {
    const Elem* fa_row = cod + f[a] * m;
    const Elem* a_row = dom + a * n;
    for (int b = 0; b < n; ++b) {
      if (f[a_row[b]] != fa_row[f[b]]) return Pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace rbg::kernels::scalar
