#include "ifss/algebra.hpp"

#include <stdexcept>

namespace ifss {

namespace {

void require_same_universe(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b,
                           const char* op) {
  if (!same_universe(a, b)) {
    throw std::invalid_argument(std::string(op) + ": operands live on different universes");
  }
}

template <typename CellOp>
IntuitionisticFuzzySet zip_cells(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b,
                                 CellOp&& op) {
  std::vector<IFValue> values;
  values.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) values.push_back(op(a.value(i), b.value(i)));
  return IntuitionisticFuzzySet(a.universe_ptr(), std::move(values));
}

}  // namespace

bool if_subset(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  require_same_universe(a, b, "if_subset");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.value(i).exact_mu() > b.value(i).exact_mu()) return false;
    if (a.value(i).exact_nu() < b.value(i).exact_nu()) return false;
  }
  return true;
}

bool if_equal(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  require_same_universe(a, b, "if_equal");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.value(i) == b.value(i))) return false;
  }
  return true;
}

IntuitionisticFuzzySet if_complement(const IntuitionisticFuzzySet& a) {
  std::vector<IFValue> values;
  values.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    values.emplace_back(a.value(i).exact_nu(), a.value(i).exact_mu());
  }
  return IntuitionisticFuzzySet(a.universe_ptr(), std::move(values));
}

IntuitionisticFuzzySet if_union(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  require_same_universe(a, b, "if_union");
  return zip_cells(a, b, [](const IFValue& x, const IFValue& y) {
    return IFValue(max(x.exact_mu(), y.exact_mu()), min(x.exact_nu(), y.exact_nu()));
  });
}

IntuitionisticFuzzySet if_intersection(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  require_same_universe(a, b, "if_intersection");
  return zip_cells(a, b, [](const IFValue& x, const IFValue& y) {
    return IFValue(min(x.exact_mu(), y.exact_mu()), max(x.exact_nu(), y.exact_nu()));
  });
}

IntuitionisticFuzzySet if_sum(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  require_same_universe(a, b, "if_sum");
  return zip_cells(a, b, [](const IFValue& x, const IFValue& y) {
    return IFValue(x.exact_mu() + y.exact_mu() - x.exact_mu() * y.exact_mu(),
                   x.exact_nu() * y.exact_nu());
  });
}

IntuitionisticFuzzySet if_product(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
  require_same_universe(a, b, "if_product");
  return zip_cells(a, b, [](const IFValue& x, const IFValue& y) {
    return IFValue(x.exact_mu() * y.exact_mu(),
                   x.exact_nu() + y.exact_nu() - x.exact_nu() * y.exact_nu());
  });
}

}  // namespace ifss
