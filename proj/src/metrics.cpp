#include "ifss/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ifss {

const char* distance_kind_name(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::hamming: return "hamming";
    case DistanceKind::normalized_hamming: return "normalized_hamming";
    case DistanceKind::euclidean: return "euclidean";
    case DistanceKind::normalized_euclidean: return "normalized_euclidean";
  }
  return "unknown";
}

DistanceKind parse_distance_kind(std::string_view name) {
  if (name == "hamming") return DistanceKind::hamming;
  if (name == "normalized_hamming") return DistanceKind::normalized_hamming;
  if (name == "euclidean") return DistanceKind::euclidean;
  if (name == "normalized_euclidean") return DistanceKind::normalized_euclidean;
  throw std::invalid_argument("unknown distance kind '" + std::string(name) + "'");
}

namespace {

void require_same_frame(const Universe& ua, const Universe& ub, const ParameterSet& pa,
                        const ParameterSet& pb, const char* op) {
  if (!(ua == ub)) throw std::invalid_argument(std::string(op) + ": operands live on different universes");
  if (!(pa == pb)) throw std::invalid_argument(std::string(op) + ": operands use different parameter sets");
}

template <typename SetT>
std::size_t union_support_size(const SetT& a, const SetT& b) {
  std::size_t count = 0;
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    if (a.in_support(p) || b.in_support(p)) ++count;
  }
  return count;
}

template <typename SetT>
std::size_t effective_m_impl(const SetT& a, const SetT& b, NormalizeOver normalize) {
  if (normalize == NormalizeOver::full) return a.parameters().size();
  std::size_t m = union_support_size(a, b);
  return m > 0 ? m : a.parameters().size();
}

double finish(DistanceKind kind, double abs_sum, double sq_sum, double scale, double n) {
  switch (kind) {
    case DistanceKind::hamming: return abs_sum / scale;
    case DistanceKind::normalized_hamming: return abs_sum / (scale * n);
    case DistanceKind::euclidean: return std::sqrt(sq_sum / scale);
    case DistanceKind::normalized_euclidean: return std::sqrt(sq_sum / (scale * n));
  }
  return 0.0;
}

}  // namespace

std::size_t effective_m(const IFSoftSet& a, const IFSoftSet& b, NormalizeOver normalize) {
  return effective_m_impl(a, b, normalize);
}

std::size_t effective_m(const SoftSet& a, const SoftSet& b, NormalizeOver normalize) {
  return effective_m_impl(a, b, normalize);
}

double if_distance(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b,
                   DistanceKind kind) {
  if (!same_universe(a, b)) throw std::invalid_argument("if_distance: operands live on different universes");
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double dmu = a.value(i).mu() - b.value(i).mu();
    double dnu = a.value(i).nu() - b.value(i).nu();
    abs_sum += std::abs(dmu) + std::abs(dnu);
    sq_sum += dmu * dmu + dnu * dnu;
  }
  return finish(kind, abs_sum, sq_sum, 2.0, static_cast<double>(a.size()));
}

double soft_distance(const SoftSet& a, const SoftSet& b, DistanceKind kind, NormalizeOver normalize) {
  require_same_frame(a.universe(), b.universe(), a.parameters(), b.parameters(), "soft_distance");
  double sum = 0.0;  // |chi_a - chi_b| and its square coincide on 0/1 entries
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      sum += a.contains(p, e) == b.contains(p, e) ? 0.0 : 1.0;
    }
  }
  double m = static_cast<double>(effective_m(a, b, normalize));
  return finish(kind, sum, sum, m, static_cast<double>(a.universe().size()));
}

double ifss_distance(const IFSoftSet& a, const IFSoftSet& b, DistanceKind kind, NormalizeOver normalize) {
  require_same_frame(a.universe(), b.universe(), a.parameters(), b.parameters(), "ifss_distance");
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      double dmu = a.value(p, e).mu() - b.value(p, e).mu();
      double dnu = a.value(p, e).nu() - b.value(p, e).nu();
      abs_sum += std::abs(dmu) + std::abs(dnu);
      sq_sum += dmu * dmu + dnu * dnu;
    }
  }
  double m = static_cast<double>(effective_m(a, b, normalize));
  return finish(kind, abs_sum, sq_sum, 2.0 * m, static_cast<double>(a.universe().size()));
}

}  // namespace ifss
