#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifss/core.hpp"

namespace ifss {

/// A parsed dataset: one universe, one parameter set, any number of named
/// IFS-sets over them.
///
/// Text format (line oriented, `#` starts a comment):
///
///   universe u1 u2
///   parameters x1 x2 x3
///
///   set gamma            # optional trailing keyword: unchecked
///   support x1 x3
///   x1: u1 0.5 0.2  u2 0.4 0.5
///   x3: u1 0.2 0.7
///   end
///
/// Rows may list any subset of elements (missing cells default to (0,1)) and
/// only parameters from the support line may have rows. Numbers are decimal
/// literals with at most six fractional digits and are kept exact. A set
/// marked `unchecked` is loaded even if cells break the 0<=mu,nu<=1 or
/// mu+nu<=1 constraints; `validate` still reports such cells.
struct DatasetDocument {
  UniversePtr universe;
  ParameterSetPtr parameters;
  std::vector<IFSoftSet> sets;

  const IFSoftSet* find(std::string_view name) const;

  friend bool operator==(const DatasetDocument& a, const DatasetDocument& b);
};

/// Parse failure with 1-based text coordinates.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a dataset document; throws ParseError on the first syntax or
/// semantic problem, naming the offending set/parameter/element.
DatasetDocument parse_dataset(std::string_view text);

/// Renders the canonical text form: full rows for every supported parameter,
/// shortest decimals, an `unchecked` marker exactly on sets that carry cell
/// violations. parse(serialize(parse(t))) == parse(t) for every valid t.
std::string serialize_dataset(const DatasetDocument& doc);

/// Reads and parses a file; throws std::runtime_error when unreadable.
DatasetDocument load_dataset_file(const std::string& path);

}  // namespace ifss
