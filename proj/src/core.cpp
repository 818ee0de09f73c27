#include "ifss/core.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace ifss {

namespace {

void check_unique_nonempty(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw std::invalid_argument(std::string(what) + ": needs at least one identifier");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) throw std::invalid_argument(std::string(what) + ": empty identifier");
    if (!seen.insert(name).second) {
      throw std::invalid_argument(std::string(what) + ": duplicate identifier '" + name + "'");
    }
  }
}

}  // namespace

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  check_unique_nonempty(elements_, "Universe");
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return i;
  }
  return std::nullopt;
}

ParameterSet::ParameterSet(std::vector<std::string> parameters) : parameters_(std::move(parameters)) {
  check_unique_nonempty(parameters_, "ParameterSet");
}

std::optional<std::size_t> ParameterSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    if (parameters_[i] == name) return i;
  }
  return std::nullopt;
}

IFValue::IFValue(Rational mu, Rational nu)
    : mu_(mu), nu_(nu), mu_d_(mu.to_double()), nu_d_(nu.to_double()) {}

namespace {

Rational snap_decimal(double v, const char* which) {
  if (!std::isfinite(v) || std::abs(v) > 1e9) {
    throw std::invalid_argument(std::string("IFValue: ") + which + " is not a small decimal");
  }
  long long n = std::llround(v * 1e6);
  if (std::abs(v - static_cast<double>(n) / 1e6) > 1e-9) {
    throw std::invalid_argument(std::string("IFValue: ") + which +
                                " is not a decimal with at most six fractional digits; "
                                "use the Rational constructor for exact values");
  }
  return Rational(n, 1000000);
}

}  // namespace

IFValue::IFValue(double mu, double nu) : IFValue(snap_decimal(mu, "mu"), snap_decimal(nu, "nu")) {}

IntuitionisticFuzzySet::IntuitionisticFuzzySet(UniversePtr universe)
    : universe_(std::move(universe)), values_(universe_->size()) {}

IntuitionisticFuzzySet::IntuitionisticFuzzySet(UniversePtr universe, std::vector<IFValue> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_->size()) {
    throw std::invalid_argument("IntuitionisticFuzzySet: value count does not match universe size");
  }
}

IntuitionisticFuzzySet IntuitionisticFuzzySet::from_entries(
    UniversePtr universe, const std::vector<std::pair<std::string, IFValue>>& entries) {
  std::vector<IFValue> values(universe->size());
  std::vector<char> assigned(universe->size(), 0);
  for (const auto& [name, value] : entries) {
    auto idx = universe->index_of(name);
    if (!idx) throw std::invalid_argument("IntuitionisticFuzzySet: unknown element '" + name + "'");
    if (assigned[*idx]) throw std::invalid_argument("IntuitionisticFuzzySet: duplicate element '" + name + "'");
    assigned[*idx] = 1;
    values[*idx] = value;
  }
  return IntuitionisticFuzzySet(std::move(universe), std::move(values));
}

const IFValue& IntuitionisticFuzzySet::value(std::string_view element) const {
  auto idx = universe_->index_of(element);
  if (!idx) throw std::invalid_argument("IntuitionisticFuzzySet: unknown element '" + std::string(element) + "'");
  return values_[*idx];
}

bool same_universe(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  return a.universe_ptr() == b.universe_ptr() || a.universe() == b.universe();
}

SoftSet build_soft_set(UniversePtr universe, ParameterSetPtr parameters,
                       const std::vector<std::string>& support,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& assignments) {
  SoftSet set;
  set.universe_ = std::move(universe);
  set.parameters_ = std::move(parameters);
  set.support_mask_.assign(set.parameters_->size(), 0);
  for (const auto& name : support) {
    auto idx = set.parameters_->index_of(name);
    if (!idx) throw std::invalid_argument("SoftSet: unknown support parameter '" + name + "'");
    if (set.support_mask_[*idx]) throw std::invalid_argument("SoftSet: duplicate support parameter '" + name + "'");
    set.support_mask_[*idx] = 1;
  }
  for (std::size_t i = 0; i < set.support_mask_.size(); ++i) {
    if (set.support_mask_[i]) set.support_.push_back(i);
  }
  set.rows_.assign(set.parameters_->size(), std::vector<char>(set.universe_->size(), 0));
  for (const auto& [param, elements] : assignments) {
    auto pi = set.parameters_->index_of(param);
    if (!pi) throw std::invalid_argument("SoftSet: unknown parameter '" + param + "'");
    if (!set.support_mask_[*pi]) {
      throw std::invalid_argument("SoftSet: assignment to parameter '" + param + "' outside the support");
    }
    for (const auto& elem : elements) {
      auto ei = set.universe_->index_of(elem);
      if (!ei) throw std::invalid_argument("SoftSet: unknown element '" + elem + "' under parameter '" + param + "'");
      set.rows_[*pi][*ei] = 1;
    }
  }
  return set;
}

std::vector<std::string> IFSoftSet::support_names() const {
  std::vector<std::string> names;
  names.reserve(support_.size());
  for (std::size_t i : support_) names.push_back(parameters_->parameter(i));
  return names;
}

IntuitionisticFuzzySet IFSoftSet::approx(std::size_t param) const {
  return IntuitionisticFuzzySet(universe_, cells_[param]);
}

namespace {

std::optional<Violation> check_cell(const IFValue& v, const std::string& param, const std::string& elem) {
  const Rational zero(0);
  const Rational one(1);
  if (v.exact_mu() < zero || v.exact_mu() > one) {
    return Violation{ViolationKind::mu_range, param, elem,
                     "mu out of [0,1] (mu=" + to_decimal6(v.exact_mu()) + ")"};
  }
  if (v.exact_nu() < zero || v.exact_nu() > one) {
    return Violation{ViolationKind::nu_range, param, elem,
                     "nu out of [0,1] (nu=" + to_decimal6(v.exact_nu()) + ")"};
  }
  if (v.exact_mu() + v.exact_nu() > one) {
    return Violation{ViolationKind::sum_exceeds_one, param, elem,
                     "mu+nu>1 (mu=" + to_decimal6(v.exact_mu()) + ", nu=" + to_decimal6(v.exact_nu()) + ")"};
  }
  return std::nullopt;
}

}  // namespace

IFSoftSet build_ifs_set(UniversePtr universe, ParameterSetPtr parameters,
                        const std::vector<std::string>& support,
                        const std::vector<CellAssignment>& cells, std::string label,
                        CellCheck check) {
  IFSoftSet set;
  set.label_ = std::move(label);
  set.universe_ = std::move(universe);
  set.parameters_ = std::move(parameters);
  set.support_mask_.assign(set.parameters_->size(), 0);
  for (const auto& name : support) {
    auto idx = set.parameters_->index_of(name);
    if (!idx) throw std::invalid_argument("IFSoftSet: unknown support parameter '" + name + "'");
    if (set.support_mask_[*idx]) throw std::invalid_argument("IFSoftSet: duplicate support parameter '" + name + "'");
    set.support_mask_[*idx] = 1;
  }
  for (std::size_t i = 0; i < set.support_mask_.size(); ++i) {
    if (set.support_mask_[i]) set.support_.push_back(i);
  }
  set.cells_.assign(set.parameters_->size(), std::vector<IFValue>(set.universe_->size()));
  std::vector<std::vector<char>> assigned(set.parameters_->size(),
                                          std::vector<char>(set.universe_->size(), 0));
  for (const auto& cell : cells) {
    auto pi = set.parameters_->index_of(cell.parameter);
    if (!pi) throw std::invalid_argument("IFSoftSet: unknown parameter '" + cell.parameter + "'");
    auto ei = set.universe_->index_of(cell.element);
    if (!ei) {
      throw std::invalid_argument("IFSoftSet: unknown element '" + cell.element + "' at parameter '" +
                                  cell.parameter + "'");
    }
    if (!set.support_mask_[*pi]) {
      throw std::invalid_argument("IFSoftSet: assignment to parameter '" + cell.parameter +
                                  "' outside the support");
    }
    if (assigned[*pi][*ei]) {
      throw std::invalid_argument("IFSoftSet: duplicate cell (" + cell.parameter + ", " + cell.element + ")");
    }
    if (check == CellCheck::strict) {
      if (auto violation = check_cell(cell.value, cell.parameter, cell.element)) {
        throw std::invalid_argument("IFSoftSet: " + violation->detail + " at (" + cell.parameter + ", " +
                                    cell.element + ")");
      }
    }
    assigned[*pi][*ei] = 1;
    set.cells_[*pi][*ei] = cell.value;
  }
  return set;
}

ValidationReport validate(const IFSoftSet& set) {
  ValidationReport report;
  const IFValue empty;
  for (std::size_t p = 0; p < set.parameters().size(); ++p) {
    for (std::size_t e = 0; e < set.universe().size(); ++e) {
      const IFValue& v = set.value(p, e);
      if (!set.in_support(p)) {
        if (!(v == empty)) {
          report.violations.push_back(Violation{ViolationKind::out_of_support_nonempty,
                                                set.parameters().parameter(p),
                                                set.universe().element(e),
                                                "value outside the support is not (0,1)"});
        }
        continue;
      }
      if (auto violation = check_cell(v, set.parameters().parameter(p), set.universe().element(e))) {
        report.violations.push_back(*violation);
      }
    }
  }
  return report;
}

}  // namespace ifss
