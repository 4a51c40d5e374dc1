#include "rbg/cochain.hpp"

#include <algorithm>

namespace rbg {

std::size_t Cochain::slots(int arity, int h_order) {
  std::size_t s = 1;
  for (int k = 0; k < arity; ++k) s *= static_cast<std::size_t>(h_order - 1);
  return s;
}

Cochain::Cochain(int arity, int h_order)
    : arity_(arity), h_order_(h_order), values_(slots(arity, h_order), 0) {
  if (arity < 0 || h_order < 1) throw InvalidInput("cochain: bad shape");
}

std::size_t Cochain::slot(std::span<const Elem> args) const {
  std::size_t s = 0;
  for (Elem h : args) s = s * (h_order_ - 1) + (h - 1);
  return s;
}

Elem Cochain::operator()(std::span<const Elem> args) const {
  for (Elem h : args) {
    if (h == 0) return 0;
  }
  return values_[slot(args)];
}

void Cochain::set(std::span<const Elem> args, Elem v) {
  if (static_cast<int>(args.size()) != arity_) throw InvalidInput("cochain: arity mismatch");
  for (Elem h : args) {
    if (h <= 0 || h >= h_order_) throw InvalidInput("cochain: degenerate or out-of-range tuple");
  }
  values_[slot(args)] = v;
}

std::vector<Elem> Cochain::tuple(std::size_t slot) const {
  std::vector<Elem> t(arity_);
  for (int k = arity_ - 1; k >= 0; --k) {
    t[k] = static_cast<Elem>(slot % (h_order_ - 1)) + 1;
    slot /= (h_order_ - 1);
  }
  return t;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Elem v) { return v == 0; });
}

Cochain pointwise_mul(const FiniteGroup& i, const Cochain& a, const Cochain& b) {
  Cochain r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r.values()[k] = i.mul(a.values()[k], b.values()[k]);
  return r;
}

Cochain pointwise_inv(const FiniteGroup& i, const Cochain& a) {
  Cochain r = a;
  for (auto& v : r.values()) v = i.inv(v);
  return r;
}

Cochain pointwise_sub(const FiniteGroup& i, const Cochain& a, const Cochain& b) {
  Cochain r = a;
  for (std::size_t k = 0; k < r.size(); ++k) {
    r.values()[k] = i.mul(a.values()[k], i.inv(b.values()[k]));
  }
  return r;
}

Cochain apply_map(const Table& f, const Cochain& a) {
  Cochain r = a;
  for (auto& v : r.values()) v = f[v];
  return r;
}

Cochain precompose(const Table& r, const Cochain& a) {
  Cochain out(a.arity(), a.h_order());
  for (std::size_t s = 0; s < out.size(); ++s) {
    auto t = a.tuple(s);
    for (auto& h : t) h = r[h];
    out.values()[s] = a(t);
  }
  return out;
}

}  // namespace rbg
