#pragma once

#include "ifss/core.hpp"

namespace ifss {

// Relations and operations on intuitionistic fuzzy sets over one universe.
// All of them work on the exact rational values, so algebraic identities
// (De Morgan, associativity, closure) hold without rounding; every binary
// operation throws std::invalid_argument when the universes differ.

/// Non-strict inclusion: mu_A <= mu_B and nu_A >= nu_B at every element.
bool if_subset(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

/// Pointwise equality of both degrees.
bool if_equal(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

/// Swaps membership and non-membership at every element.
IntuitionisticFuzzySet if_complement(const IntuitionisticFuzzySet& a);

/// Pointwise (max mu, min nu).
IntuitionisticFuzzySet if_union(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

/// Pointwise (min mu, max nu).
IntuitionisticFuzzySet if_intersection(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

/// Probabilistic sum: (mu_a + mu_b - mu_a*mu_b, nu_a*nu_b).
IntuitionisticFuzzySet if_sum(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

/// Probabilistic product: (mu_a*mu_b, nu_a + nu_b - nu_a*nu_b).
IntuitionisticFuzzySet if_product(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

}  // namespace ifss
