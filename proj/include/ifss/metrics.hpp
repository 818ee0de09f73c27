#pragma once

#include <string>
#include <string_view>

#include "ifss/core.hpp"

namespace ifss {

enum class DistanceKind { hamming, normalized_hamming, euclidean, normalized_euclidean };

const char* distance_kind_name(DistanceKind kind);
DistanceKind parse_distance_kind(std::string_view name);  // throws on unknown name

/// Normalization constant for the soft / IFS-set distances: `support` divides
/// by the size of the union of the two supports (falling back to the full
/// parameter count when both supports are empty), `full` always divides by
/// the full parameter count.
enum class NormalizeOver { support, full };

std::size_t effective_m(const IFSoftSet& a, const IFSoftSet& b,
                        NormalizeOver normalize = NormalizeOver::support);
std::size_t effective_m(const SoftSet& a, const SoftSet& b,
                        NormalizeOver normalize = NormalizeOver::support);

/// Distance between two intuitionistic fuzzy sets on one universe of size n.
/// hamming <= n, normalized_hamming <= 1, euclidean <= sqrt(n),
/// normalized_euclidean <= 1.
double if_distance(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b,
                   DistanceKind kind);

/// Distance between two soft sets via their 0/1 characteristic matrices.
double soft_distance(const SoftSet& a, const SoftSet& b, DistanceKind kind,
                     NormalizeOver normalize = NormalizeOver::support);

/// Distance between two IFS-sets; parameters outside a support contribute
/// through the empty value (0,1), so differing supports are fine. Same
/// bounds as if_distance. All four kinds are metrics.
double ifss_distance(const IFSoftSet& a, const IFSoftSet& b, DistanceKind kind,
                     NormalizeOver normalize = NormalizeOver::support);

}  // namespace ifss
