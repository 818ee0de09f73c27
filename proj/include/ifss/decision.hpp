#pragma once

#include <string>

#include "ifss/core.hpp"
#include "ifss/metrics.hpp"
#include "ifss/similarity.hpp"

namespace ifss {

enum class Verdict { similar, not_similar };

const char* verdict_name(Verdict v);  // "similar" / "not_similar"

enum class SimilarityMeasure { s_prime, s_exp };

struct DiagnoseConfig {
  DistanceKind kind = DistanceKind::hamming;
  SimilarityMeasure measure = SimilarityMeasure::s_prime;
  SimilarityConfig similarity;  // alpha for s_exp, threshold for the verdict
};

/// Outcome of one template-against-subject comparison.
struct VerdictReport {
  std::string template_label;
  std::string subject_label;
  DistanceKind kind = DistanceKind::hamming;
  double distance = 0.0;
  double similarity = 0.0;
  double threshold = 0.5;
  Verdict verdict = Verdict::not_similar;  // similar iff similarity > threshold, strictly
  std::size_t effective_m = 0;
  std::size_t n = 0;
};

/// Compares an expert template IFS-set against a subject IFS-set: computes
/// the selected distance, derives the similarity (1/(1+d) or exp(-alpha*d)),
/// and decides by strict comparison against the threshold. Symmetric in its
/// two set arguments apart from the report labels.
VerdictReport diagnose(const IFSoftSet& tmpl, const IFSoftSet& subject,
                       const DiagnoseConfig& config = {});

}  // namespace ifss
