#pragma once

#include "ifss/core.hpp"
#include "ifss/metrics.hpp"
#include "ifss/rational.hpp"
#include "ifss/similarity.hpp"

namespace ifss::oracle {

// Exact rational reference implementations of every distance and similarity,
// evaluated directly from the stored rational cell values. These are kept
// independent of the floating-point paths in metrics.cpp / similarity.cpp so
// the two routes can be checked against each other.
//
// For the two euclidean kinds every distance function below returns the
// exact *squared* value; callers compare squares (or take a floating-point
// root) rather than introducing irrational arithmetic.

Rational if_distance(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b,
                     DistanceKind kind);

Rational soft_distance(const SoftSet& a, const SoftSet& b, DistanceKind kind,
                       NormalizeOver normalize = NormalizeOver::support);

Rational ifss_distance(const IFSoftSet& a, const IFSoftSet& b, DistanceKind kind,
                       NormalizeOver normalize = NormalizeOver::support);

Rational soft_similarity(const SoftSet& a, const SoftSet& b);

Rational ifss_similarity(const IFSoftSet& a, const IFSoftSet& b,
                         SimilarityReading reading = SimilarityReading::dot);

/// Exact 1/(1+d); defined for the hamming kinds only (the euclidean kinds
/// make the value irrational) and throws std::invalid_argument otherwise.
Rational ifss_similarity_prime(const IFSoftSet& a, const IFSoftSet& b,
                               DistanceKind kind = DistanceKind::hamming);

}  // namespace ifss::oracle
