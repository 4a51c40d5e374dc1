#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbg {

using Elem = std::int32_t;

// A failed law check: which law, and the tuple of element indices at which
// it first fails in canonical order.
struct Witness {
  std::string law;
  std::vector<Elem> at;

  std::string describe() const;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Thrown by constructors that certify a law (group axioms, RB law, cocycle
// conditions) when the input violates it.
class LawViolation : public Error {
 public:
  explicit LawViolation(Witness w);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

}  // namespace rbg
