#include "monofol/rat.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "monofol/errors.hpp"

namespace monofol {

Rat rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

namespace {

// "p" or "p/q", base 10, optional leading sign on each part, no whitespace.
bool well_formed_rational(const std::string& s) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t& i) {
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i > start;
  };
  if (!digits(pos)) return false;
  if (pos == s.size()) return true;
  if (s[pos] != '/') return false;
  ++pos;
  if (!digits(pos)) return false;
  return pos == s.size();
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  if (!well_formed_rational(s)) {
    throw ParseError("not a rational: \"" + s + "\"");
  }
  // GMP rejects explicit '+' signs; the validator has pinned where they are.
  std::string plain;
  for (char c : s)
    if (c != '+') plain.push_back(c);
  Rat q;
  if (q.set_str(plain, 10) != 0) {
    throw ParseError("not a rational: \"" + s + "\"");
  }
  if (q.get_den() == 0) {
    throw ParseError("zero denominator: \"" + s + "\"");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string vec_to_string(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ",";
    out << rat_to_string(v[i]);
  }
  out << ")";
  return out.str();
}

mpz_class denominator_lcm(const Vec& v) {
  mpz_class l = 1;
  for (const Rat& q : v) l = lcm(l, q.get_den());
  return l;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LengthMismatch("dot: length mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec unit_vec(int n, int i) {
  Vec e(static_cast<std::size_t>(n), Rat(0));
  e.at(static_cast<std::size_t>(i)) = 1;
  return e;
}

bool is_zero_vec(const Vec& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

}  // namespace monofol
