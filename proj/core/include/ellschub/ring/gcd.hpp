#pragma once

#include "ellschub/ring/poly.hpp"

namespace ellschub {

// Greatest common divisor in Z[x]; the result has positive leading
// coefficient. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Heuristic evaluation/interpolation gcd of primitive inputs; nullopt when
// every evaluation point is rejected.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b);

// Recursive primitive polynomial remainder sequence gcd of primitive inputs.
Poly prs_gcd(const Poly& a, const Poly& b);

}  // namespace ellschub
