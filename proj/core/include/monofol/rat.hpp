#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace monofol {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator as long as every constructor goes through rat() or
// rat_from_string(), which canonicalize.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

// n/d reduced to lowest terms, d > 0. Throws std::invalid_argument on d = 0.
Rat rat(long n, long d = 1);

// Parses "p" or "p/q" (optional sign on either part). Throws ParseError on
// anything else, including q = 0.
Rat rat_from_string(const std::string& s);

// Canonical "p" or "p/q" form, q > 1 only when needed.
std::string rat_to_string(const Rat& q);

std::string vec_to_string(const Vec& v);

// lcm of the denominators; multiplying the vector by this clears it to
// integer entries. Returns 1 for the empty vector.
mpz_class denominator_lcm(const Vec& v);

Rat dot(const Vec& a, const Vec& b);

Vec unit_vec(int n, int i);

bool is_zero_vec(const Vec& v);

// Exponent arithmetic helpers; throw std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);

}  // namespace monofol
