#pragma once

#include <vector>

#include "ellschub/roots/weyl_group.hpp"

namespace ellschub {

// Longest element w with w(n) = m, the highest representative of its coset
// in W_n / W_{n-1}. Type A_{n-1}: 1 <= m <= n. Type C_n: m in {-n..-1, 1..n}.
// m = 1 in type A and m = -n in type C give the longest element.
WeylElem highest_coset_rep(const WeylGroup& g, int m);
// Expected length of highest_coset_rep(g, m).
int highest_coset_length(const WeylGroup& g, int m);

// Type A only: one-line notation avoids 3412 and 4231.
bool avoids_patterns_A(const WeylGroup& g, WeylElem w);

// Tableau criteria on one-line and window notation.
bool ehresmann_leq(const std::vector<int>& v, const std::vector<int>& w);
bool proctor_leq(const std::vector<int>& v, const std::vector<int>& w);

// Position of n in the extended indexing I = {-(n-1), ..., 0, 1, ..., n} of a
// type C window: the p with i_p = n, where i_{-(j-1)} = -i_j.
int extended_position_of_n(const std::vector<int>& window);
// Entry i_k of the extended bijection, k in I.
int extended_entry(const std::vector<int>& window, int k);

// Product of distinct simple reflections.
bool has_distinct_letters(const WeylGroup& g, WeylElem w);

}  // namespace ellschub
