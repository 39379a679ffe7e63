#include <set>

#include "cyspec/errors.hpp"
#include "cyspec/kodaira.hpp"
#include "doctest.h"
#include "table_expr.hpp"

using namespace cyspec;


TEST_CASE("fiber names round trip") {
  for (const char* s : {"I1", "I5", "I12", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*"})
    CHECK(to_string(parse_fiber(s)) == s);
  CHECK_THROWS_AS(parse_fiber("I0"), UnknownFiberError);
  CHECK_THROWS_AS(parse_fiber("V"), UnknownFiberError);
  CHECK_THROWS_AS(parse_fiber("I"), UnknownFiberError);
  CHECK_THROWS_AS(parse_monodromy("splitt"), UnknownFiberError);
}

TEST_CASE("lookup examples") {
  const auto g2 = fiber_record(parse_fiber("I0*"), Monodromy::non_split);
  CHECK(g2.algebra == LieAlgebraId::g2());
  REQUIRE(g2.rho0.has_value());
  CHECK(to_string(*g2.rho0) == "dim7_g2");

  const auto su5 = fiber_record(parse_fiber("I5"), Monodromy::split);
  CHECK(su5.algebra == LieAlgebraId::su(5));
  CHECK(to_string(*su5.rhoQ1) == "lambda2");
  CHECK(to_string(*su5.rhoQ2) == "fund");
  CHECK_FALSE(su5.rho0.has_value());

  const auto e8 = fiber_record(parse_fiber("II*"), Monodromy::split);
  CHECK(e8.algebra == LieAlgebraId::e8());
  CHECK_FALSE(e8.rho0.has_value());
  CHECK_FALSE(e8.rhoQ1.has_value());
  CHECK_FALSE(e8.rhoQ2.has_value());

  CHECK(milnor_contributions(parse_fiber("I1"), Monodromy::split) == MilnorContributions{0, 1});
  for (int k = 1; k <= 6; ++k)
    CHECK(milnor_contributions({FiberSymbol::I, 2 * k + 1}, Monodromy::non_split) == MilnorContributions{1, 0});
  CHECK(milnor_contributions(parse_fiber("IV*"), Monodromy::non_split) == MilnorContributions{0, 0});
}

TEST_CASE("unknown combinations") {
  CHECK_THROWS_AS(fiber_record(parse_fiber("I2"), Monodromy::non_split), UnknownFiberError);
  CHECK_THROWS_AS(fiber_record(parse_fiber("I1"), Monodromy::non_split), UnknownFiberError);
  CHECK_THROWS_AS(fiber_record(parse_fiber("I1*"), Monodromy::semi_split), UnknownFiberError);
  CHECK_THROWS_AS(fiber_record(parse_fiber("II*"), Monodromy::non_split), UnknownFiberError);
  CHECK_THROWS_AS(fiber_record(parse_fiber("III"), Monodromy::semi_split), UnknownFiberError);
}

TEST_CASE("validation examples") {
  CHECK(validate_record_against_engine(fiber_record(parse_fiber("I1*"), Monodromy::split)).empty());
  CHECK(validate_record_against_engine(fiber_record(parse_fiber("I4"), Monodromy::non_split)).empty());
  auto su3 = fiber_record(parse_fiber("I3"), Monodromy::split);
  su3.table_charged.adjoint = Rational(7);
  CHECK(validate_record_against_engine(su3).size() == 1);
  auto missing = fiber_record(parse_fiber("I5"), Monodromy::split);
  missing.table_charged.rhoQ1.reset();
  CHECK(validate_record_against_engine(missing).size() == 1);
}

TEST_CASE("every record agrees with the engine") {
  const auto all = enumerate_records(12);
  CHECK(all.size() > 40);
  for (const auto& r : all) {
    const auto issues = validate_record_against_engine(r);
    INFO(to_string(r.fiber), " ", to_string(r.monodromy));
    CHECK(issues.empty());
    if (r.algebra.family != Family::trivial) CHECK(r.rho0.has_value() == !simply_laced(r.algebra));
    // Adjoint column is dim - rank.
    CHECK(*r.table_charged.adjoint == dim_algebra(r.algebra) - rank_algebra(r.algebra));
  }
}

TEST_CASE("shipped table file matches the lookup") {
  const auto doc = table::load(CYSPEC_DATA_DIR "/kodaira_table.json");
  std::set<std::pair<std::string, std::string>> seen;
  int instances = 0;
  for (const auto& row : doc["rows"]) {
    INFO(row["label"].get<std::string>());
    const auto [var, values] = table::instances(row);
    for (int v : values) {
      const auto f = table::fiber(row, var, v);
      const auto m = parse_monodromy(row["monodromy"].get<std::string>());
      const auto rec = fiber_record(f, m);
      seen.insert({to_string(f), to_string(m)});
      ++instances;
      CHECK(rec.algebra == table::algebra(row, var, v));
      CHECK(rec.rho0 == table::reps(row["rho0"]));
      CHECK(rec.rhoQ1 == table::reps(row["rhoQ1"]));
      CHECK(rec.rhoQ2 == table::reps(row["rhoQ2"]));
      const auto& c = row["charged"];
      CHECK(rec.table_charged.adjoint == table::cell(c["adjoint"], var, v));
      CHECK(rec.table_charged.rho0 == table::cell(c["rho0"], var, v));
      CHECK(rec.table_charged.rhoQ1 == table::cell(c["rhoQ1"], var, v));
      CHECK(rec.table_charged.rhoQ2 == table::cell(c["rhoQ2"], var, v));
      CHECK(rec.mP1 == row["milnor"][0].get<int>());
      CHECK(rec.mP2 == row["milnor"][1].get<int>());
    }
  }
  // Same range as the lookup: parameters up to 12, plus I13 from k = 6.
  std::set<std::pair<std::string, std::string>> expected;
  for (const auto& r : enumerate_records(13)) {
    if (r.fiber.n == 13 && !(r.fiber.symbol == FiberSymbol::I && r.monodromy == Monodromy::non_split)) continue;
    expected.insert({to_string(r.fiber), to_string(r.monodromy)});
  }
  CHECK(seen == expected);
  CHECK(instances == static_cast<int>(seen.size()));
}
