#pragma once

#include "ifss/core.hpp"
#include "ifss/metrics.hpp"

namespace ifss {

struct SimilarityConfig {
  double alpha = 1.0;      // steepness of the exponential family, must be > 0
  double threshold = 0.5;  // alpha-similarity cut, must lie in (0,1)
};

/// Which numerator the IFS-set similarity uses: `dot` takes the absolute
/// value of each per-parameter dot product of (mu - nu) difference vectors,
/// `elementwise` sums the absolute componentwise products instead. The
/// denominator is the same per-parameter max of squared vector norms.
enum class SimilarityReading { dot, elementwise };

const char* similarity_reading_name(SimilarityReading reading);
SimilarityReading parse_similarity_reading(std::string_view name);

/// Ratio of summed row dot products to summed max squared row norms over the
/// 0/1 characteristic matrices. Returns 0 for disjoint supports; throws when
/// both supports are empty or no approximation is non-empty (0/0).
double soft_similarity(const SoftSet& a, const SoftSet& b);

/// 1 / (1 + e) for the soft euclidean distance e.
double soft_similarity_prime(const SoftSet& a, const SoftSet& b);

/// exp(-alpha * e) for the soft euclidean distance e; alpha must be > 0.
double soft_similarity_exp(const SoftSet& a, const SoftSet& b, double alpha);

/// Similarity of two IFS-sets with equal supports, computed from the
/// per-parameter difference vectors (mu - nu) over the support. Returns 1
/// when every difference vector of both sets is zero. Throws when the
/// supports differ.
double ifss_similarity(const IFSoftSet& a, const IFSoftSet& b,
                       SimilarityReading reading = SimilarityReading::dot);

/// 1 / (1 + d) for the selected IFS-set distance (hamming by default).
double ifss_similarity_prime(const IFSoftSet& a, const IFSoftSet& b,
                             DistanceKind kind = DistanceKind::hamming);

/// exp(-alpha * d) for the selected IFS-set distance; alpha must be > 0.
double ifss_similarity_exp(const IFSoftSet& a, const IFSoftSet& b, double alpha,
                           DistanceKind kind = DistanceKind::hamming);

/// True when the hamming-based similarity 1/(1+d) is at least `threshold`;
/// threshold must lie in (0,1).
bool alpha_similar(const IFSoftSet& a, const IFSoftSet& b, double threshold);

/// True when the hamming-based similarity 1/(1+d) is strictly above 1/2.
bool significantly_similar(const IFSoftSet& a, const IFSoftSet& b);

}  // namespace ifss
