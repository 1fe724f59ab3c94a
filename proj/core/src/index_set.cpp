#include "monofol/index_set.hpp"

#include <sstream>

namespace monofol {

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  for (int i = 0; i < n; ++i)
    if (!set_contains(s, i)) out.insert(i);
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  for (int i : a)
    if (set_contains(b, i)) out.insert(i);
  return out;
}

bool in_bounds(const IndexSet& s, int n) {
  for (int i : s)
    if (i < 0 || i >= n) return false;
  return true;
}

std::string index_set_to_string_1based(const IndexSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i : s) {
    if (!first) out << ",";
    out << (i + 1);
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace monofol
