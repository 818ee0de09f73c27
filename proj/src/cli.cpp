#include "ifss/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ifss/core.hpp"
#include "ifss/dataset.hpp"
#include "ifss/decision.hpp"
#include "ifss/metrics.hpp"
#include "ifss/oracle.hpp"
#include "ifss/similarity.hpp"

namespace ifss {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

const IFSoftSet& pick_set(const DatasetDocument& doc, const std::string& name,
                          const std::string& file) {
  const IFSoftSet* set = doc.find(name);
  if (!set) throw std::runtime_error("no set named '" + name + "' in " + file);
  return *set;
}

bool euclidean_kind(DistanceKind kind) {
  return kind == DistanceKind::euclidean || kind == DistanceKind::normalized_euclidean;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  DatasetDocument doc = load_dataset_file(file);
  std::ostringstream text;
  bool all_ok = true;
  for (const auto& set : doc.sets) {
    ValidationReport report = validate(set);
    for (const auto& v : report.violations) {
      text << set.label() << " (" << v.parameter << ", " << v.element << "): " << v.detail << '\n';
      all_ok = false;
    }
  }
  if (all_ok) {
    out << "OK: " << doc.sets.size() << " sets, " << doc.parameters->size() << " parameters, "
        << doc.universe->size() << " elements\n";
    return 0;
  }
  out << "INVALID\n" << text.str();
  return 1;
}

int cmd_distance(const std::string& file, const std::string& name_a, const std::string& name_b,
                 DistanceKind kind, NormalizeOver normalize, bool exact, std::ostream& out) {
  DatasetDocument doc = load_dataset_file(file);
  const IFSoftSet& a = pick_set(doc, name_a, file);
  const IFSoftSet& b = pick_set(doc, name_b, file);
  double value = ifss_distance(a, b, kind, normalize);
  std::ostringstream text;
  text << fixed6(value);
  if (exact) {
    Rational r = oracle::ifss_distance(a, b, kind, normalize);
    text << " (" << (euclidean_kind(kind) ? "sqrt(" + r.str() + ")" : r.str()) << ")";
  }
  out << text.str() << '\n';
  return 0;
}

int cmd_similarity(const std::string& file, const std::string& name_a, const std::string& name_b,
                   const std::string& measure, double alpha, DistanceKind kind,
                   SimilarityReading reading, std::ostream& out) {
  DatasetDocument doc = load_dataset_file(file);
  const IFSoftSet& a = pick_set(doc, name_a, file);
  const IFSoftSet& b = pick_set(doc, name_b, file);
  double value = 0.0;
  if (measure == "s_ifs") {
    value = ifss_similarity(a, b, reading);
  } else if (measure == "s_prime") {
    value = ifss_similarity_prime(a, b, kind);
  } else {
    value = ifss_similarity_exp(a, b, alpha, kind);
  }
  out << fixed6(value) << '\n';
  return 0;
}

int cmd_diagnose(const std::string& file, const std::string& template_name,
                 const std::string& subject_name, double threshold, DistanceKind kind,
                 const std::string& report_path, std::ostream& out) {
  DatasetDocument doc = load_dataset_file(file);
  const IFSoftSet& tmpl = pick_set(doc, template_name, file);
  const IFSoftSet& subject = pick_set(doc, subject_name, file);
  DiagnoseConfig config;
  config.kind = kind;
  config.similarity.threshold = threshold;
  VerdictReport report = diagnose(tmpl, subject, config);

  std::ostringstream text;
  text << "template:   " << report.template_label << '\n'
       << "subject:    " << report.subject_label << '\n'
       << "kind:       " << distance_kind_name(report.kind) << '\n'
       << "distance:   " << fixed6(report.distance) << '\n'
       << "similarity: " << fixed6(report.similarity) << '\n'
       << "threshold:  " << fixed6(report.threshold) << '\n'
       << "verdict:    " << (report.verdict == Verdict::similar ? "SIMILAR" : "NOT SIMILAR") << '\n';

  if (!report_path.empty()) {
    nlohmann::json j;
    j["template"] = report.template_label;
    j["subject"] = report.subject_label;
    j["distance_kind"] = distance_kind_name(report.kind);
    j["distance"] = report.distance;
    j["similarity"] = report.similarity;
    j["threshold"] = report.threshold;
    j["verdict"] = verdict_name(report.verdict);
    j["effective_m"] = report.effective_m;
    j["n"] = report.n;
    std::ofstream file_out(report_path, std::ios::binary);
    if (!file_out) throw std::runtime_error("cannot write report to '" + report_path + "'");
    file_out << j.dump(2) << '\n';
  }
  out << text.str();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances, similarity measures and a similarity-based decision rule over "
               "intuitionistic fuzzy soft sets"};
  app.name("ifss");
  app.require_subcommand(1);

  const std::vector<std::string> kind_names = {"hamming", "normalized_hamming", "euclidean",
                                               "normalized_euclidean"};
  CLI::Validator open_unit_interval(
      [](std::string& value) -> std::string {
        try {
          double v = std::stod(value);
          if (v > 0.0 && v < 1.0) return {};
        } catch (...) {
        }
        return "'" + value + "' is not a number in (0,1)";
      },
      "FLOAT in (0,1)");

  std::string file;
  std::string set_a;
  std::string set_b;
  std::string kind = "hamming";
  std::string normalize = "support";
  std::string measure;
  std::string reading = "dot";
  std::string report_path;
  double alpha = 1.0;
  double threshold = 0.5;
  bool exact = false;

  auto* validate_cmd = app.add_subcommand("validate", "Parse a dataset and report cell violations");
  validate_cmd->add_option("file", file, "dataset file")->required();

  auto* distance_cmd = app.add_subcommand("distance", "Distance between two IFS-sets");
  distance_cmd->add_option("file", file, "dataset file")->required();
  distance_cmd->add_option("setA", set_a, "first set name")->required();
  distance_cmd->add_option("setB", set_b, "second set name")->required();
  distance_cmd->add_option("--kind", kind, "distance kind")
      ->check(CLI::IsMember(kind_names))
      ->capture_default_str();
  distance_cmd->add_option("--normalize-over", normalize, "divide by the support union or the full parameter set")
      ->check(CLI::IsMember({"support", "full"}))
      ->capture_default_str();
  distance_cmd->add_flag("--exact", exact, "also print the exact fraction (squared under sqrt for euclidean kinds)");

  auto* similarity_cmd = app.add_subcommand("similarity", "Similarity between two IFS-sets");
  similarity_cmd->add_option("file", file, "dataset file")->required();
  similarity_cmd->add_option("setA", set_a, "first set name")->required();
  similarity_cmd->add_option("setB", set_b, "second set name")->required();
  similarity_cmd->add_option("--measure", measure, "similarity measure")
      ->check(CLI::IsMember({"s_ifs", "s_prime", "s_exp"}))
      ->required();
  similarity_cmd->add_option("--alpha", alpha, "steepness of s_exp")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  similarity_cmd->add_option("--kind", kind, "distance kind behind s_prime / s_exp")
      ->check(CLI::IsMember(kind_names))
      ->capture_default_str();
  similarity_cmd->add_option("--reading", reading, "numerator form of s_ifs")
      ->check(CLI::IsMember({"dot", "elementwise"}))
      ->capture_default_str();

  auto* diagnose_cmd = app.add_subcommand("diagnose", "Compare a template against a subject and print the verdict");
  diagnose_cmd->add_option("file", file, "dataset file")->required();
  diagnose_cmd->add_option("template", set_a, "template set name")->required();
  diagnose_cmd->add_option("subject", set_b, "subject set name")->required();
  diagnose_cmd->add_option("--threshold", threshold, "verdict threshold")
      ->check(open_unit_interval)
      ->capture_default_str();
  diagnose_cmd->add_option("--kind", kind, "distance kind")
      ->check(CLI::IsMember(kind_names))
      ->capture_default_str();
  diagnose_cmd->add_option("--report", report_path, "write a JSON report to this path");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, out);
    if (distance_cmd->parsed()) {
      return cmd_distance(file, set_a, set_b, parse_distance_kind(kind),
                          normalize == "full" ? NormalizeOver::full : NormalizeOver::support, exact,
                          out);
    }
    if (similarity_cmd->parsed()) {
      return cmd_similarity(file, set_a, set_b, measure, alpha, parse_distance_kind(kind),
                            parse_similarity_reading(reading), out);
    }
    return cmd_diagnose(file, set_a, set_b, threshold, parse_distance_kind(kind), report_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ifss
