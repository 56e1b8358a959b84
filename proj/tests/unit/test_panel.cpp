#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "panelkit/errors.hpp"
#include "panelkit/panel.hpp"

using namespace panelkit;
using testutil::make_panel;

TEST_CASE("build_panel: complete 6x41x6 panel") {
  const std::vector<std::string> vars = {"HP",     "FLOW",   "INCOME",
                                         "INTEREST", "EXRATE", "STOCKPRICE"};
  const Panel p = make_panel(6, 41, vars, [](int e, int t, int v) {
    return e + 0.01 * t + 100.0 * v + 1.0;
  });
  CHECK(p.n_entities() == 6);
  CHECK(p.n_periods() == 41);
  CHECK(p.n_variables() == 6);
  CHECK(p.n_entities() * p.n_periods() == 246);  // rows per variable
  CHECK(p.periods().front().str() == "2009Q1");
  CHECK(p.periods().back().str() == "2019Q1");
}

TEST_CASE("build_panel: minimal balanced panel") {
  const Panel p = make_panel(1, 2, {"X"}, [](int, int t, int) {
    return t + 1.0;
  });
  CHECK(p.n_entities() * p.n_periods() * p.n_variables() == 2);
  CHECK(p.value(0, 0, 0) == 1.0);
  CHECK(p.value(0, 1, 0) == 2.0);
}

TEST_CASE("build_panel: violations") {
  std::vector<PanelRecord> records;
  const Quarter q1{2010, 2}, q2{2010, 3};
  records.push_back({"A", q1, "X", 1.0});
  records.push_back({"A", q2, "X", 2.0});
  records.push_back({"B", q1, "X", 3.0});

  SUBCASE("missing cell") {
    CHECK_THROWS_AS(Panel::build(records), MissingCellError);
  }
  SUBCASE("duplicate cell") {
    records.push_back({"B", q2, "X", 4.0});
    records.push_back({"B", q2, "X", 4.0});
    CHECK_THROWS_AS(Panel::build(records), DuplicateCellError);
  }
  SUBCASE("gap in periods") {
    records.push_back({"B", q2, "X", 4.0});
    records.push_back({"A", Quarter{2011, 1}, "X", 5.0});
    records.push_back({"B", Quarter{2011, 1}, "X", 6.0});
    CHECK_THROWS_AS(Panel::build(records), GapInPeriodsError);
  }
}

TEST_CASE("build_panel is insensitive to record order") {
  std::vector<PanelRecord> records;
  Quarter q{2009, 1};
  for (int t = 0; t < 8; ++t) {
    for (int e = 0; e < 3; ++e)
      for (int v = 0; v < 2; ++v)
        records.push_back({"E" + std::to_string(e), q,
                           "V" + std::to_string(v),
                           std::sin(1.0 + e + 2 * t + 3 * v)});
    q = q.next();
  }
  const Panel a = Panel::build(records);
  std::mt19937 gen(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(records.begin(), records.end(), gen);
    CHECK(Panel::build(records) == a);
  }
}

TEST_CASE("apply_transform: natural log") {
  const double e_const = std::exp(1.0);
  const Panel p =
      make_panel(2, 4, {"X"}, [&](int, int, int) { return e_const; });
  const Panel logged = p.transformed({"X", Transform::NaturalLog});
  for (int e = 0; e < 2; ++e)
    for (int t = 0; t < 4; ++t)
      CHECK(logged.value(e, t, 0) == doctest::Approx(1.0).epsilon(1e-15));

  SUBCASE("level transform is the identity") {
    CHECK(p.transformed({"X", Transform::Level}) == p);
  }
  SUBCASE("non-positive value rejected") {
    const Panel zero = make_panel(1, 3, {"X"}, [](int, int t, int) {
      return static_cast<double>(t);  // contains 0
    });
    CHECK_THROWS_AS(zero.transformed({"X", Transform::NaturalLog}),
                    NonPositiveForLogError);
  }
}

TEST_CASE("income construction ln(gdp/cpi*100)") {
  const Panel raw = make_panel(2, 6, {"CPI", "GDP"}, [](int e, int t, int v) {
    return v == 1 ? 5000.0 + 100.0 * t + 10.0 * e : 100.0 + t;
  });
  std::vector<double> income;
  for (int e = 0; e < 2; ++e)
    for (int t = 0; t < 6; ++t)
      income.push_back(raw.value(e, t, raw.variable_index("GDP")) /
                       raw.value(e, t, raw.variable_index("CPI")) * 100.0);
  const Panel with_income =
      raw.with_variable("INCOME", income)
          .transformed({"INCOME", Transform::NaturalLog});
  for (int e = 0; e < 2; ++e)
    for (int t = 0; t < 6; ++t) {
      const double gdp = raw.value(e, t, raw.variable_index("GDP"));
      const double cpi = raw.value(e, t, raw.variable_index("CPI"));
      CHECK(with_income.value(e, t, with_income.variable_index("INCOME")) ==
            doctest::Approx(std::log(gdp / cpi * 100.0)).epsilon(1e-14));
    }
}

TEST_CASE("log round trip within 1e-12") {
  panelkit::Rng rng(3);
  const Panel p = make_panel(3, 10, {"X"}, [&](int, int, int) {
    return std::exp(2.0 * rng.gaussian());
  });
  const Panel logged = p.transformed({"X", Transform::NaturalLog});
  for (int e = 0; e < 3; ++e)
    for (int t = 0; t < 10; ++t)
      CHECK(std::fabs(std::exp(logged.value(e, t, 0)) - p.value(e, t, 0)) <=
            1e-12 * std::fabs(p.value(e, t, 0)));
}

TEST_CASE("lag and diff") {
  Eigen::VectorXd c(4);
  c << 5, 5, 5, 5;
  const Eigen::VectorXd d = diff(c, 1);
  REQUIRE(d.size() == 3);
  CHECK(d.isZero(0));

  Eigen::VectorXd x(3);
  x << 1, 2, 3;
  const Eigen::VectorXd l = lag(x, 1);
  REQUIRE(l.size() == 2);
  CHECK(l(0) == 1.0);
  CHECK(l(1) == 2.0);

  Eigen::VectorXd y(4);
  y << 1, 3, 6, 10;
  const Eigen::VectorXd dy = diff(y, 1);
  REQUIRE(dy.size() == 3);
  CHECK(dy(0) == 2.0);
  CHECK(dy(1) == 3.0);
  CHECK(dy(2) == 4.0);

  SUBCASE("diff then cumulative sum reproduces the series") {
    panelkit::Rng rng(11);
    Eigen::VectorXd z(50);
    for (int i = 0; i < 50; ++i) z(i) = rng.gaussian();
    const Eigen::VectorXd dz = diff(z, 1);
    double acc = z(0);
    for (int i = 0; i < dz.size(); ++i) {
      acc += dz(i);
      CHECK(std::fabs(acc - z(i + 1)) < 1e-12);
    }
  }
  SUBCASE("too short") {
    Eigen::VectorXd s(2);
    s << 1, 2;
    CHECK_THROWS_AS(lag(s, 2), SequenceTooShortError);
    CHECK_THROWS_AS(diff(s, 2), SequenceTooShortError);
  }
  SUBCASE("k-fold diff equals chained diff") {
    Eigen::VectorXd z(10);
    for (int i = 0; i < 10; ++i) z(i) = i * i;
    CHECK((diff(z, 2) - diff(diff(z, 1), 1)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("quarter parsing") {
  CHECK(Quarter::parse("2009Q1") == Quarter{2009, 1});
  CHECK(Quarter::parse("2019Q4").next() == Quarter{2020, 1});
  CHECK_THROWS_AS(Quarter::parse("2009Q5"), ParseError);
  CHECK_THROWS_AS(Quarter::parse("2009"), ParseError);
  CHECK_THROWS_AS(Quarter::parse("Q1"), ParseError);
  CHECK_THROWS_AS(Quarter::parse("20x9Q1"), ParseError);
}
