#include "ifss/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifss {

const char* similarity_reading_name(SimilarityReading reading) {
  return reading == SimilarityReading::dot ? "dot" : "elementwise";
}

SimilarityReading parse_similarity_reading(std::string_view name) {
  if (name == "dot") return SimilarityReading::dot;
  if (name == "elementwise") return SimilarityReading::elementwise;
  throw std::invalid_argument("unknown similarity reading '" + std::string(name) + "'");
}

namespace {

void require_same_frame(const Universe& ua, const Universe& ub, const ParameterSet& pa,
                        const ParameterSet& pb, const char* op) {
  if (!(ua == ub)) throw std::invalid_argument(std::string(op) + ": operands live on different universes");
  if (!(pa == pb)) throw std::invalid_argument(std::string(op) + ": operands use different parameter sets");
}

void require_positive_alpha(double alpha, const char* op) {
  if (!(alpha > 0.0)) throw std::invalid_argument(std::string(op) + ": alpha must be positive");
}

}  // namespace

double soft_similarity(const SoftSet& a, const SoftSet& b) {
  require_same_frame(a.universe(), b.universe(), a.parameters(), b.parameters(), "soft_similarity");
  if (a.support().empty() && b.support().empty()) {
    throw std::invalid_argument("soft_similarity: undefined, both supports are empty");
  }
  bool supports_intersect = false;
  for (std::size_t p : a.support()) {
    if (b.in_support(p)) {
      supports_intersect = true;
      break;
    }
  }
  if (!supports_intersect) return 0.0;

  double num = 0.0;
  double den = 0.0;
  for (std::size_t p = 0; p < a.parameters().size(); ++p) {
    double dot = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      double fa = a.contains(p, e) ? 1.0 : 0.0;
      double gb = b.contains(p, e) ? 1.0 : 0.0;
      dot += fa * gb;
      norm_a += fa;
      norm_b += gb;
    }
    num += dot;
    den += std::max(norm_a, norm_b);
  }
  if (den == 0.0) {
    throw std::invalid_argument("soft_similarity: undefined, every approximation is empty");
  }
  return num / den;
}

double soft_similarity_prime(const SoftSet& a, const SoftSet& b) {
  return 1.0 / (1.0 + soft_distance(a, b, DistanceKind::euclidean));
}

double soft_similarity_exp(const SoftSet& a, const SoftSet& b, double alpha) {
  require_positive_alpha(alpha, "soft_similarity_exp");
  return std::exp(-alpha * soft_distance(a, b, DistanceKind::euclidean));
}

double ifss_similarity(const IFSoftSet& a, const IFSoftSet& b, SimilarityReading reading) {
  require_same_frame(a.universe(), b.universe(), a.parameters(), b.parameters(), "ifss_similarity");
  if (a.support() != b.support()) {
    throw std::invalid_argument("ifss_similarity: defined only for equal supports");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t p : a.support()) {
    double dot = 0.0;
    double abs_dot = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (std::size_t e = 0; e < a.universe().size(); ++e) {
      double da = a.value(p, e).mu() - a.value(p, e).nu();
      double db = b.value(p, e).mu() - b.value(p, e).nu();
      dot += da * db;
      abs_dot += std::abs(da * db);
      norm_a += da * da;
      norm_b += db * db;
    }
    num += reading == SimilarityReading::dot ? std::abs(dot) : abs_dot;
    den += std::max(norm_a, norm_b);
  }
  if (den == 0.0) return 1.0;  // every difference vector of both sets is zero
  return num / den;
}

double ifss_similarity_prime(const IFSoftSet& a, const IFSoftSet& b, DistanceKind kind) {
  return 1.0 / (1.0 + ifss_distance(a, b, kind));
}

double ifss_similarity_exp(const IFSoftSet& a, const IFSoftSet& b, double alpha, DistanceKind kind) {
  require_positive_alpha(alpha, "ifss_similarity_exp");
  return std::exp(-alpha * ifss_distance(a, b, kind));
}

bool alpha_similar(const IFSoftSet& a, const IFSoftSet& b, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("alpha_similar: threshold must lie in (0,1)");
  }
  return ifss_similarity_prime(a, b) >= threshold;
}

bool significantly_similar(const IFSoftSet& a, const IFSoftSet& b) {
  return ifss_similarity_prime(a, b) > 0.5;
}

}  // namespace ifss
