#include "doctest.h"

#include <memory>
#include <random>
#include <stdexcept>

#include "ifss/core.hpp"

using namespace ifss;

namespace {

UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<Universe>(std::move(names));
}

ParameterSetPtr make_parameters(std::vector<std::string> names) {
  return std::make_shared<ParameterSet>(std::move(names));
}

// The car-evaluation table: four rated parameters out of six.
IFSoftSet cars_set() {
  auto u = make_universe({"u1", "u2", "u3", "u4"});
  auto e = make_parameters({"x1", "x2", "x3", "x4", "x5", "x6"});
  std::vector<CellAssignment> cells;
  auto row = [&cells](const std::string& p, std::initializer_list<std::pair<double, double>> vals) {
    int i = 0;
    for (auto [mu, nu] : vals) {
      cells.push_back({p, "u" + std::to_string(++i), IFValue(mu, nu)});
    }
  };
  row("x1", {{0.5, 0.2}, {0.5, 0.2}, {0.5, 0.2}, {0.5, 0.2}});
  row("x2", {{0.6, 0.4}, {0.9, 0.1}, {0.5, 0.3}, {0.1, 0.9}});
  row("x3", {{0.7, 0.2}, {0.8, 0.1}, {0.2, 0.16}, {0.4, 0.5}});
  row("x4", {{0.4, 0.3}, {0.2, 0.7}, {0.8, 0.2}, {0.2, 0.1}});
  return build_ifs_set(u, e, {"x1", "x2", "x3", "x4"}, cells, "cars");
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("universe and parameter set enforce unique non-empty names") {
  CHECK_THROWS_AS(Universe({}), std::invalid_argument);
  CHECK_THROWS_AS(Universe({"u1", "u1"}), std::invalid_argument);
  CHECK_THROWS_AS(ParameterSet({""}), std::invalid_argument);
  Universe u({"u1", "u2"});
  CHECK(u.size() == 2);
  CHECK(u.index_of("u2") == 1);
  CHECK(!u.index_of("u9").has_value());
}

TEST_CASE("IFValue defaults to the empty pair and keeps values exact") {
  IFValue empty;
  CHECK(empty.exact_mu() == Rational(0));
  CHECK(empty.exact_nu() == Rational(1));
  IFValue v(0.7, 0.2);
  CHECK(v.exact_mu() == Rational(7, 10));
  CHECK(v.exact_nu() == Rational(1, 5));
  CHECK(v.mu() == doctest::Approx(0.7));
  IFValue w(Rational(1, 3), Rational(1, 3));
  CHECK(w.exact_mu() == Rational(1, 3));
  // Doubles that are no 6-digit decimal are rejected rather than guessed at.
  CHECK_THROWS_AS(IFValue(0.12345678, 0.1), std::invalid_argument);
}

TEST_CASE("building the car table") {
  IFSoftSet cars = cars_set();
  CHECK(cars.label() == "cars");
  CHECK(cars.support().size() == 4);
  CHECK(cars.value(2, 2).exact_nu() == Rational(4, 25));  // (x3, u3)
  CHECK(cars.value(4, 0) == IFValue());                   // x5 outside the support
  CHECK(validate(cars).ok());
}

TEST_CASE("empty support yields the empty approximation everywhere") {
  auto u = make_universe({"u1", "u2"});
  auto e = make_parameters({"x1", "x2"});
  IFSoftSet set = build_ifs_set(u, e, {}, {});
  for (std::size_t p = 0; p < 2; ++p) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(set.value(p, j) == IFValue());
  }
  CHECK(validate(set).ok());
}

TEST_CASE("builder rejects bad cells and names with the offender spelled out") {
  auto u = make_universe({"u1"});
  auto e = make_parameters({"x1"});
  CHECK_THROWS_WITH_AS(build_ifs_set(u, e, {"x1"}, {{"x1", "u1", IFValue(0.7, 0.5)}}),
                       doctest::Contains("mu+nu>1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_ifs_set(u, e, {"x1"}, {{"x1", "u9", IFValue(0.1, 0.1)}}),
                       doctest::Contains("u9"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_ifs_set(u, e, {"x9"}, {}), doctest::Contains("x9"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_ifs_set(u, e, {}, {{"x1", "u1", IFValue(0.1, 0.1)}}),
                       doctest::Contains("outside the support"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      build_ifs_set(u, e, {"x1"},
                    {{"x1", "u1", IFValue(0.1, 0.1)}, {"x1", "u1", IFValue(0.2, 0.2)}}),
      doctest::Contains("duplicate cell"), std::invalid_argument);
}

TEST_CASE("unchecked builds accept invalid cells, validate reports them") {
  auto u = make_universe({"u1", "u2"});
  auto e = make_parameters({"x1"});

  IFSoftSet sum_bad = build_ifs_set(u, e, {"x1"}, {{"x1", "u1", IFValue(0.9, 0.8)}}, "g",
                                    CellCheck::unchecked);
  ValidationReport r1 = validate(sum_bad);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].kind == ViolationKind::sum_exceeds_one);
  CHECK(r1.violations[0].parameter == "x1");
  CHECK(r1.violations[0].element == "u1");

  IFSoftSet range_bad = build_ifs_set(u, e, {"x1"}, {{"x1", "u1", IFValue(0.1, -0.1)}}, "g",
                                      CellCheck::unchecked);
  ValidationReport r2 = validate(range_bad);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].kind == ViolationKind::nu_range);
}

TEST_CASE("soft set builder mirrors the same name checks") {
  auto u = make_universe({"u1", "u2"});
  auto e = make_parameters({"x1", "x2"});
  SoftSet f = build_soft_set(u, e, {"x1"}, {{"x1", {"u1"}}});
  CHECK(f.contains(0, 0));
  CHECK(!f.contains(0, 1));
  CHECK(!f.contains(1, 0));  // outside support: empty
  CHECK_THROWS_AS(build_soft_set(u, e, {"x2"}, {{"x1", {"u1"}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_soft_set(u, e, {"x1"}, {{"x1", {"zz"}}}), std::invalid_argument);
}

TEST_CASE("random valid builds always validate clean") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int> mu_pick(0, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size_pick(1, 5);
    std::size_t n = size_pick(rng);
    std::size_t m = size_pick(rng);
    std::vector<std::string> elems, params;
    for (std::size_t i = 0; i < n; ++i) elems.push_back("u" + std::to_string(i + 1));
    for (std::size_t i = 0; i < m; ++i) params.push_back("x" + std::to_string(i + 1));
    auto u = make_universe(elems);
    auto e = make_parameters(params);
    std::vector<std::string> support;
    for (const auto& p : params) {
      if (rng() % 2 == 0) support.push_back(p);
    }
    std::vector<CellAssignment> cells;
    for (const auto& p : support) {
      for (const auto& el : elems) {
        int mu = mu_pick(rng);
        std::uniform_int_distribution<int> nu_pick(0, 100 - mu);
        cells.push_back({p, el, IFValue(Rational(mu, 100), Rational(nu_pick(rng), 100))});
      }
    }
    IFSoftSet set = build_ifs_set(u, e, support, cells);
    CHECK(validate(set).ok());
    for (std::size_t p = 0; p < m; ++p) {
      if (!set.in_support(p)) {
        for (std::size_t j = 0; j < n; ++j) CHECK(set.value(p, j) == IFValue());
      }
    }
  }
}

}  // TEST_SUITE
