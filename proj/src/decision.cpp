#include "ifss/decision.hpp"

#include <cmath>
#include <stdexcept>

namespace ifss {

const char* verdict_name(Verdict v) {
  return v == Verdict::similar ? "similar" : "not_similar";
}

VerdictReport diagnose(const IFSoftSet& tmpl, const IFSoftSet& subject,
                       const DiagnoseConfig& config) {
  if (!(config.similarity.threshold > 0.0 && config.similarity.threshold < 1.0)) {
    throw std::invalid_argument("diagnose: threshold must lie in (0,1)");
  }
  if (config.measure == SimilarityMeasure::s_exp && !(config.similarity.alpha > 0.0)) {
    throw std::invalid_argument("diagnose: alpha must be positive");
  }

  VerdictReport report;
  report.template_label = tmpl.label();
  report.subject_label = subject.label();
  report.kind = config.kind;
  report.distance = ifss_distance(tmpl, subject, config.kind);
  report.similarity = config.measure == SimilarityMeasure::s_prime
                          ? 1.0 / (1.0 + report.distance)
                          : std::exp(-config.similarity.alpha * report.distance);
  report.threshold = config.similarity.threshold;
  report.verdict = report.similarity > report.threshold ? Verdict::similar : Verdict::not_similar;
  report.effective_m = effective_m(tmpl, subject);
  report.n = tmpl.universe().size();
  return report;
}

}  // namespace ifss
