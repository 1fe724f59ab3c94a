#pragma once

#include <string>
#include <vector>

#include "monofol/chart.hpp"
#include "monofol/laurent.hpp"

namespace monofol {

// Derivation sum_i W_i d/dx_i with Laurent polynomial coefficients. The
// symbolic side of the toolkit: fields built here verify the closed-form
// linear transforms elsewhere by honest pullback and saturation.
class VectorField {
public:
  explicit VectorField(int n = 0) : components_(static_cast<std::size_t>(n), LaurentPoly(n)) {}

  int vars() const { return static_cast<int>(components_.size()); }

  LaurentPoly& component(int i) { return components_[static_cast<std::size_t>(i)]; }
  const LaurentPoly& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

  bool operator==(const VectorField& other) const = default;

  // "x1 d1 - x2 d2" style; components ascending, terms in canonical order.
  std::string str() const;

private:
  std::vector<LaurentPoly> components_;
};

// sum_i a_i x_i d/dx_i.
VectorField monomial_field(const Vec& a);

// d/dx_i.
VectorField coordinate_field(int n, int i);

// W(f) = sum_i W_i df/dx_i, exact.
LaurentPoly apply(const VectorField& w, const LaurentPoly& f);

// Lie bracket [W1,W2], componentwise W1(W2_i) - W2(W1_i).
VectorField bracket(const VectorField& w1, const VectorField& w2);

// Substitutes x_j = y_j, x_i = y_i y_j (i in C \ {j}) into f, multiplying
// the factors out term by term.
LaurentPoly substitute_chart(const LaurentPoly& f, const Chart& chart);

// Chain rule through the chart: component i of the result is
// W(y_i written in x), then expressed in the y coordinates. Components off
// the center can pick up negative powers of y_j.
VectorField pullback_chart(const VectorField& w, const Chart& chart);

struct Saturation {
  VectorField field;
  std::int64_t power = 0;  // the k with field = y_j^k * input
};

// Multiplies by the unique power of the exceptional coordinate y_j making
// the field polynomial in y_j, tangent to {y_j = 0}, and divisible by no
// further power of y_j within those constraints (component j retains
// exactly the powers log tangency demands). The zero field comes back
// unchanged with power 0.
Saturation saturate_exceptional(const VectorField& w, int j);

// Tangent to the divisor {x_i = 0 : i in divisor}: component i divisible
// by x_i for every i in the set.
bool is_log_tangent(const VectorField& w, const IndexSet& divisor);

}  // namespace monofol
