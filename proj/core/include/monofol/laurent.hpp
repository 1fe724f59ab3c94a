#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monofol/rat.hpp"

namespace monofol {

// Integer exponent vector of a Laurent monomial, one entry per variable.
using ExpVec = std::vector<std::int64_t>;

// Sparse Laurent polynomial over Q in a fixed number of variables. Terms
// map exponent vectors to nonzero coefficients; the map's lexicographic
// key order is the canonical term order for printing. Equality is term-map
// equality.
class LaurentPoly {
public:
  explicit LaurentPoly(int vars = 0) : vars_(vars) {}

  static LaurentPoly constant(int vars, const Rat& c);
  static LaurentPoly monomial(int vars, const ExpVec& exps, const Rat& c);
  static LaurentPoly variable(int vars, int i);  // x_i

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  void add_term(const ExpVec& exps, const Rat& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  // d/dx_i: term c x^m becomes c m_i x^(m - e_i).
  LaurentPoly derivative(int i) const;

  // Multiplication by x_i^k.
  LaurentPoly mul_power(int i, std::int64_t k) const;

  // Every term has exponent >= 1 in variable i (vacuously true when zero).
  bool divisible_by(int i) const;

  // Smallest exponent of variable i over all terms; 0 for the zero poly.
  std::int64_t min_exponent(int i) const;

  bool operator==(const LaurentPoly& other) const = default;

  // "3/2 x1^2 x3^-1 + 1" style, terms in canonical order.
  std::string str() const;

private:
  int vars_ = 0;
  std::map<ExpVec, Rat> terms_;
};

}  // namespace monofol
