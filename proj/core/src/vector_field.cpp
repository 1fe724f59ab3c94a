#include "monofol/vector_field.hpp"

#include <sstream>
#include <stdexcept>

#include "monofol/errors.hpp"

namespace monofol {

bool VectorField::is_zero() const {
  for (const LaurentPoly& p : components_)
    if (!p.is_zero()) return false;
  return true;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  if (vars() != other.vars()) throw LengthMismatch("VectorField: mixed dimensions");
  for (int i = 0; i < vars(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  if (vars() != other.vars()) throw LengthMismatch("VectorField: mixed dimensions");
  for (int i = 0; i < vars(); ++i) components_[i] -= other.components_[i];
  return *this;
}

std::string VectorField::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < vars(); ++i) {
    if (components_[i].is_zero()) continue;
    std::string p = components_[i].str();
    // A lone negative term moves its sign into the separator.
    bool negated = components_[i].terms().size() == 1 && p[0] == '-';
    if (negated) p = p.substr(1);
    if (first)
      out << (negated ? "-" : "");
    else
      out << (negated ? " - " : " + ");
    if (p.find(' ') != std::string::npos)
      out << "(" << p << ")";
    else
      out << p;
    out << " d" << (i + 1);
    first = false;
  }
  return out.str();
}

VectorField monomial_field(const Vec& a) {
  int n = static_cast<int>(a.size());
  VectorField w(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    w.component(i) = LaurentPoly::variable(n, i) * a[i];
  }
  return w;
}

VectorField coordinate_field(int n, int i) {
  VectorField w(n);
  w.component(i) = LaurentPoly::constant(n, Rat(1));
  return w;
}

LaurentPoly apply(const VectorField& w, const LaurentPoly& f) {
  if (w.vars() != f.vars()) throw LengthMismatch("apply: mixed dimensions");
  LaurentPoly out(f.vars());
  for (int i = 0; i < w.vars(); ++i) {
    if (w.component(i).is_zero()) continue;
    out += w.component(i) * f.derivative(i);
  }
  return out;
}

VectorField bracket(const VectorField& w1, const VectorField& w2) {
  if (w1.vars() != w2.vars()) throw LengthMismatch("bracket: mixed dimensions");
  VectorField out(w1.vars());
  for (int i = 0; i < w1.vars(); ++i)
    out.component(i) = apply(w1, w2.component(i)) - apply(w2, w1.component(i));
  return out;
}

LaurentPoly substitute_chart(const LaurentPoly& f, const Chart& chart) {
  require_valid_chart(chart, f.vars());
  LaurentPoly out(f.vars());
  for (const auto& [m, c] : f.terms()) {
    ExpVec e(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      int ii = static_cast<int>(i);
      if (ii == chart.j) {
        e[i] = checked_add(e[i], m[i]);
      } else if (set_contains(chart.center.indices, ii)) {
        // x_i = y_i y_j
        e[i] = checked_add(e[i], m[i]);
        e[chart.j] = checked_add(e[chart.j], m[i]);
      } else {
        e[i] = checked_add(e[i], m[i]);
      }
    }
    out.add_term(e, c);
  }
  return out;
}

VectorField pullback_chart(const VectorField& w, const Chart& chart) {
  int n = w.vars();
  require_valid_chart(chart, n);
  VectorField out(n);
  for (int i = 0; i < n; ++i) {
    // y_i written in the x coordinates.
    LaurentPoly psi;
    if (i != chart.j && set_contains(chart.center.indices, i)) {
      // y_i = x_i / x_j
      ExpVec e(static_cast<std::size_t>(n), 0);
      e[i] = 1;
      e[chart.j] = -1;
      psi = LaurentPoly::monomial(n, e, Rat(1));
    } else {
      psi = LaurentPoly::variable(n, i);
    }
    out.component(i) = substitute_chart(apply(w, psi), chart);
  }
  return out;
}

Saturation saturate_exceptional(const VectorField& w, int j) {
  if (w.is_zero()) return {w, 0};
  // Smallest k with y_j^k w polynomial in y_j and still tangent to
  // {y_j = 0}: every component clears its poles, and component j keeps one
  // power of y_j. Dividing past that point would leave the logarithmic
  // fields, turning e.g. the center's Euler field y_j d_j into d_j.
  bool first = true;
  std::int64_t k = 0;
  for (int i = 0; i < w.vars(); ++i) {
    if (w.component(i).is_zero()) continue;
    std::int64_t bound = -w.component(i).min_exponent(j);
    if (i == j) bound = checked_add(bound, 1);
    if (first || bound > k) k = bound;
    first = false;
  }
  Saturation s;
  s.power = k;
  s.field = VectorField(w.vars());
  for (int i = 0; i < w.vars(); ++i)
    s.field.component(i) = w.component(i).mul_power(j, s.power);
  return s;
}

bool is_log_tangent(const VectorField& w, const IndexSet& divisor) {
  for (int i : divisor) {
    if (i < 0 || i >= w.vars()) throw std::invalid_argument("is_log_tangent: index out of range");
    if (!w.component(i).divisible_by(i)) return false;
  }
  return true;
}

}  // namespace monofol
