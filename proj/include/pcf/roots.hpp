#pragma once

#include <vector>

#include "pcf/interval.hpp"
#include "pcf/poly.hpp"

namespace pcf {

// Sturm chain of P with remainders scaled to primitive form (positive factors
// only, so sign variations are preserved).
std::vector<Poly> sturm_sequence(const Poly& P);

int sign_variations(const std::vector<Poly>& chain, const Rat& x);

// Number of distinct real roots of the chain's polynomial in (lo, hi].
int count_roots(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi);

// Disjoint rational intervals, one real root each, covering all real roots.
// A rational root may come back as a degenerate [r, r] interval.
// Throws SquarefreeError if gcd(P, P') is nonconstant.
std::vector<Interval> isolate_real_roots(const Poly& P);

// Bisect an isolating interval down to width <= eps.
// Throws BracketError if the interval does not bracket a sign change
// (degenerate intervals whose point is a root are returned as-is).
Interval refine_root(const Poly& P, Interval iv, const Rat& eps);

// One bisection step (width halves unless already degenerate).
Interval refine_step(const Poly& P, const Interval& iv);

} // namespace pcf
