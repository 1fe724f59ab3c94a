#include "monofol/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace monofol {

LaurentPoly LaurentPoly::constant(int vars, const Rat& c) {
  LaurentPoly p(vars);
  p.add_term(ExpVec(static_cast<std::size_t>(vars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int vars, const ExpVec& exps, const Rat& c) {
  if (static_cast<int>(exps.size()) != vars)
    throw std::invalid_argument("LaurentPoly::monomial: exponent length != vars");
  LaurentPoly p(vars);
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int vars, int i) {
  ExpVec e(static_cast<std::size_t>(vars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(vars, e, Rat(1));
}

void LaurentPoly::add_term(const ExpVec& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::derivative(int i) const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExpVec d = e;
    d[i] = checked_sub(d[i], 1);
    out.add_term(d, c * Rat(static_cast<long>(e[i])));
  }
  return out;
}

LaurentPoly LaurentPoly::mul_power(int i, std::int64_t k) const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    ExpVec d = e;
    d[i] = checked_add(d[i], k);
    out.terms_.emplace(d, c);
  }
  return out;
}

bool LaurentPoly::divisible_by(int i) const {
  for (const auto& [e, c] : terms_)
    if (e[i] < 1) return false;
  return true;
}

std::int64_t LaurentPoly::min_exponent(int i) const {
  bool first = true;
  std::int64_t m = 0;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] < m) m = e[i];
    first = false;
  }
  return m;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;

    bool any_var = false;
    std::ostringstream vars_part;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars_part << " ";
      vars_part << "x" << (i + 1);
      if (e[i] != 1) vars_part << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      out << rat_to_string(coeff);
    } else {
      if (coeff != 1) out << rat_to_string(coeff) << " ";
      out << vars_part.str();
    }
  }
  return out.str();
}

}  // namespace monofol
