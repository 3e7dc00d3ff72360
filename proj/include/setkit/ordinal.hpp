#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "setkit/errors.hpp"

namespace setkit {

enum class OrdinalKind { Zero, Successor, Limit };

// Ordinals below epsilon_0 in Cantor normal form:
//   w^e_1 * c_1 + ... + w^e_k * c_k   with e_1 > e_2 > ... > e_k
// and every coefficient a positive integer.  The empty sum is 0.
// Exponents are themselves ordinals of the same shape; the representation
// is unique, so structural equality is ordinal equality.
class Ordinal {
 public:
  using Coeff = mpz_class;
  struct Term;

  Ordinal() = default;  // 0

  static Ordinal from_nat(const Coeff& n);
  static Ordinal from_nat(unsigned long n) { return from_nat(Coeff(n)); }
  static Ordinal omega();
  // w^exponent * coefficient as a one-term ordinal.  coefficient >= 1.
  static Ordinal single_term(Ordinal exponent, Coeff coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_nat() const;  // 0 or a single w^0 term
  // The coefficient of w^0 (0 when absent).
  Coeff nat_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Ordinal& leading_exponent() const;  // pre: not zero

  OrdinalKind kind() const;

  bool operator==(const Ordinal& o) const;
  std::strong_ordering operator<=>(const Ordinal& o) const;

 private:
  // terms already in canonical order; not validated.
  static Ordinal make(std::vector<Term> terms);

  friend Ordinal add(const Ordinal& a, const Ordinal& b);
  friend Ordinal mul(const Ordinal& a, const Ordinal& b);
  friend Ordinal pow(const Ordinal& a, const Ordinal& b);

  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Coeff coefficient;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
// Closed-form case analysis for limit exponents; natural exponents go by
// iterated multiplication.  Throws limit_error when the result would need
// an astronomically long term list or coefficient.
Ordinal pow(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

OrdinalKind classify(const Ordinal& a);
// Maximum of a finite list; the empty list has supremum 0.
Ordinal sup_list(std::span<const Ordinal> items);

// Grammar: w | decimal | a+b | a*b | a^b | (a), with + and * left
// associative, ^ right associative, precedence ^ > * > +.
Ordinal parse_ordinal(const std::string& text);  // throws parse_error
// Canonical rendering, e.g. "w^2*3 + w + 5"; parses back to the same value.
std::string to_string(const Ordinal& a);

inline constexpr std::size_t kRecursionFuel = 1u << 20;

// Evaluates out[0] = init, out[i+1] = step(i, out[i]) for i < n and returns
// all n+1 values.  One value per natural number, never a completed limit.
template <class T, class Step>
std::vector<T> recurse_omega(T init, Step step, std::size_t n,
                             std::size_t fuel = kRecursionFuel) {
  if (n > fuel) throw limit_error("recurse_omega: step count exceeds fuel");
  std::vector<T> out;
  out.reserve(n + 1);
  out.push_back(std::move(init));
  for (std::size_t i = 0; i < n; ++i) out.push_back(step(i, out.back()));
  return out;
}

}  // namespace setkit
