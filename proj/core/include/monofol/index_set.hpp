#pragma once

#include <set>
#include <string>

namespace monofol {

// Coordinate index set; 0-based everywhere in memory. File formats and CLI
// output are 1-based, converted at the JSON layer.
using IndexSet = std::set<int>;

inline bool set_contains(const IndexSet& s, int i) { return s.count(i) != 0; }

IndexSet complement(const IndexSet& s, int n);

IndexSet set_intersection(const IndexSet& a, const IndexSet& b);

bool in_bounds(const IndexSet& s, int n);

// "{1,2}" with 1-based indices, matching the history label format.
std::string index_set_to_string_1based(const IndexSet& s);

}  // namespace monofol
