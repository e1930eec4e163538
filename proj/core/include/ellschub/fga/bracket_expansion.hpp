#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellschub/fga/formal_group_algebra.hpp"

namespace ellschub {

// c * u^u_power * prod_k y_{-beta_k}^{exponents[k]}, beta_k the positive roots.
struct BracketTerm {
  mpq_class coeff;
  int u_power = 0;
  std::vector<int> exponents;
};

// Writes f as a sum of bracket terms with u_power <= m/2 for bracket degree m,
// using the smallest total degree that works (up to max_degree). Columns are
// ordered by degree, then u power; the result is exact and deterministic.
std::optional<std::vector<BracketTerm>> expand_in_brackets(const FormalGroupAlgebra& S, const RatFunc& f,
                                                           int max_degree, std::size_t max_columns = 400);

RatFunc bracket_sum_value(const FormalGroupAlgebra& S, const std::vector<BracketTerm>& terms);
// "1 + u[13][23]", "2[-12] - [-12]^2"; needs a root system with brackets.
std::string format_bracket_sum(const FormalGroupAlgebra& S, const std::vector<BracketTerm>& terms);

}  // namespace ellschub
