#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifss/rational.hpp"

namespace ifss {

/// Ordered list of element identifiers. The declared order is fixed and
/// defines vector-component order for every measure built on top.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<std::string> elements_;
};

/// Ordered list of parameter identifiers; same ordering contract as Universe.
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::string> parameters);

  std::size_t size() const { return parameters_.size(); }
  const std::vector<std::string>& parameters() const { return parameters_; }
  const std::string& parameter(std::size_t i) const { return parameters_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
    return a.parameters_ == b.parameters_;
  }

 private:
  std::vector<std::string> parameters_;
};

using UniversePtr = std::shared_ptr<const Universe>;
using ParameterSetPtr = std::shared_ptr<const ParameterSet>;

/// A (membership, non-membership) pair. Values are held as exact rationals
/// with doubles cached once for the floating-point measure paths; the
/// default-constructed value is the empty pair (0, 1).
///
/// Construction does not enforce the range and mu+nu <= 1 constraints; those
/// are checked where coordinates are known (builders, the dataset parser,
/// validate()), so invalid values can be represented and reported.
class IFValue {
 public:
  IFValue() : IFValue(Rational(0), Rational(1)) {}

  /// Accepts doubles that are decimal literals with at most six fractional
  /// digits (within 1e-9 of such a literal, absorbing binary rounding);
  /// anything else throws std::invalid_argument.
  IFValue(double mu, double nu);
  IFValue(Rational mu, Rational nu);

  double mu() const { return mu_d_; }
  double nu() const { return nu_d_; }
  const Rational& exact_mu() const { return mu_; }
  const Rational& exact_nu() const { return nu_; }

  friend bool operator==(const IFValue& a, const IFValue& b) {
    return a.mu_ == b.mu_ && a.nu_ == b.nu_;
  }

 private:
  Rational mu_;
  Rational nu_;
  double mu_d_;
  double nu_d_;
};

/// Assigns an IFValue to each universe element; unlisted elements default to
/// the empty value (0, 1). Immutable after construction.
class IntuitionisticFuzzySet {
 public:
  explicit IntuitionisticFuzzySet(UniversePtr universe);
  IntuitionisticFuzzySet(UniversePtr universe, std::vector<IFValue> values);

  /// Throws std::invalid_argument on unknown or duplicated element names.
  static IntuitionisticFuzzySet from_entries(
      UniversePtr universe, const std::vector<std::pair<std::string, IFValue>>& entries);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  const IFValue& value(std::size_t i) const { return values_[i]; }
  const IFValue& value(std::string_view element) const;
  const std::vector<IFValue>& values() const { return values_; }

  friend bool operator==(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    return *a.universe_ == *b.universe_ && a.values_ == b.values_;
  }

 private:
  UniversePtr universe_;
  std::vector<IFValue> values_;
};

bool same_universe(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b);

/// Parameterized family of crisp subsets of the universe; rows are empty for
/// parameters outside the support.
class SoftSet {
 public:
  const Universe& universe() const { return *universe_; }
  const ParameterSet& parameters() const { return *parameters_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const ParameterSetPtr& parameters_ptr() const { return parameters_; }

  bool in_support(std::size_t param) const { return support_mask_[param]; }
  const std::vector<std::size_t>& support() const { return support_; }
  bool contains(std::size_t param, std::size_t elem) const { return rows_[param][elem] != 0; }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return *a.universe_ == *b.universe_ && *a.parameters_ == *b.parameters_ &&
           a.support_ == b.support_ && a.rows_ == b.rows_;
  }

  friend SoftSet build_soft_set(UniversePtr, ParameterSetPtr, const std::vector<std::string>&,
                                const std::vector<std::pair<std::string, std::vector<std::string>>>&);

 private:
  SoftSet() = default;

  UniversePtr universe_;
  ParameterSetPtr parameters_;
  std::vector<std::size_t> support_;  // sorted parameter indices
  std::vector<char> support_mask_;
  std::vector<std::vector<char>> rows_;  // m x n characteristic matrix
};

/// Builds a soft set from (parameter, element list) assignments. Assigned
/// parameters must be in the support; names must exist in the declarations.
SoftSet build_soft_set(UniversePtr universe, ParameterSetPtr parameters,
                       const std::vector<std::string>& support,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& assignments);

/// One (parameter, element) cell of an IFS-set under construction.
struct CellAssignment {
  std::string parameter;
  std::string element;
  IFValue value;
};

/// Cell-level validation policy for builders and the dataset parser.
/// strict rejects out-of-range values and mu+nu > 1; unchecked loads them
/// as-is (validate() still reports every violation afterwards).
enum class CellCheck { strict, unchecked };

/// Soft set whose approximation is an intuitionistic fuzzy set per parameter;
/// parameters outside the support map to the empty set ((0,1) everywhere).
class IFSoftSet {
 public:
  const std::string& label() const { return label_; }
  const Universe& universe() const { return *universe_; }
  const ParameterSet& parameters() const { return *parameters_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const ParameterSetPtr& parameters_ptr() const { return parameters_; }

  bool in_support(std::size_t param) const { return support_mask_[param]; }
  const std::vector<std::size_t>& support() const { return support_; }
  std::vector<std::string> support_names() const;

  const IFValue& value(std::size_t param, std::size_t elem) const { return cells_[param][elem]; }
  IntuitionisticFuzzySet approx(std::size_t param) const;

  /// Structural equality: declarations, support, and exact cell values.
  friend bool operator==(const IFSoftSet& a, const IFSoftSet& b) {
    return *a.universe_ == *b.universe_ && *a.parameters_ == *b.parameters_ &&
           a.support_ == b.support_ && a.cells_ == b.cells_;
  }

  friend IFSoftSet build_ifs_set(UniversePtr, ParameterSetPtr, const std::vector<std::string>&,
                                 const std::vector<CellAssignment>&, std::string, CellCheck);

 private:
  IFSoftSet() = default;

  std::string label_;
  UniversePtr universe_;
  ParameterSetPtr parameters_;
  std::vector<std::size_t> support_;  // sorted parameter indices
  std::vector<char> support_mask_;
  std::vector<std::vector<IFValue>> cells_;  // m x n, (0,1) outside support
};

/// Builds an IFS-set from per-cell assignments. Unassigned elements of a
/// supported parameter default to (0,1). Throws std::invalid_argument naming
/// the offender on unknown names, duplicate cells, assignments outside the
/// support and, under CellCheck::strict, cell invariant violations.
IFSoftSet build_ifs_set(UniversePtr universe, ParameterSetPtr parameters,
                        const std::vector<std::string>& support,
                        const std::vector<CellAssignment>& cells, std::string label = "",
                        CellCheck check = CellCheck::strict);

enum class ViolationKind { mu_range, nu_range, sum_exceeds_one, out_of_support_nonempty };

struct Violation {
  ViolationKind kind;
  std::string parameter;
  std::string element;
  std::string detail;  // human-readable, e.g. "mu+nu>1 (mu=0.8, nu=0.9)"
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Total function: lists every cell invariant violation with its
/// (parameter, element) coordinates. Valid sets yield an empty report.
ValidationReport validate(const IFSoftSet& set);

}  // namespace ifss
