#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rbg/group.hpp"

namespace rbg {

// Normalized n-cochain H^n -> I: stored on the (|H|-1)^n tuples with no
// identity entry, in lexicographic order; any tuple containing the identity
// reads as 0. Values are element indices of I (any group, abelian or not).
class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, int h_order);

  int arity() const { return arity_; }
  int h_order() const { return h_order_; }
  std::size_t size() const { return values_.size(); }

  Elem operator()(std::span<const Elem> args) const;
  Elem operator()(std::initializer_list<Elem> args) const {
    return (*this)(std::span<const Elem>(args.begin(), args.size()));
  }
  void set(std::span<const Elem> args, Elem v);
  void set(std::initializer_list<Elem> args, Elem v) {
    set(std::span<const Elem>(args.begin(), args.size()), v);
  }

  std::vector<Elem>& values() { return values_; }
  const std::vector<Elem>& values() const { return values_; }

  // The tuple stored at a slot, and the slot of a non-degenerate tuple.
  std::vector<Elem> tuple(std::size_t slot) const;
  std::size_t slot(std::span<const Elem> args) const;

  bool is_zero() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
  friend auto operator<=>(const Cochain& a, const Cochain& b) { return a.values_ <=> b.values_; }

  static std::size_t slots(int arity, int h_order);

 private:
  int arity_ = 0;
  int h_order_ = 1;
  std::vector<Elem> values_;
};

// Pointwise arithmetic in the value group i (multiplicative form; for an
// abelian i these are +, - and negation).
Cochain pointwise_mul(const FiniteGroup& i, const Cochain& a, const Cochain& b);
Cochain pointwise_inv(const FiniteGroup& i, const Cochain& a);
Cochain pointwise_sub(const FiniteGroup& i, const Cochain& a, const Cochain& b);  // a - b
Cochain apply_map(const Table& f, const Cochain& a);                              // f o a
// f-bar: precompose every argument with r
Cochain precompose(const Table& r, const Cochain& a);

}  // namespace rbg
