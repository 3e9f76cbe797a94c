#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "ultraweights/errors.hpp"
#include "ultraweights/serialize.hpp"

using namespace ultraweights;

TEST(Serialize, NonFiniteNumbers) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(number(inf), Json("inf"));
  EXPECT_EQ(number(-inf), Json("-inf"));
  EXPECT_EQ(to_number(Json("inf"), "x"), inf);
  EXPECT_TRUE(std::isnan(to_number(Json("nan"), "x")));
  EXPECT_EQ(to_number(Json(2.5), "x"), 2.5);
  EXPECT_THROW(to_number(Json("two"), "x"), InputError);
}

TEST(Serialize, ShortestRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, 2.0, 1e-300, 123456789.125}) EXPECT_EQ(std::stod(shortest(x)), x);
  EXPECT_EQ(shortest(0.1), "0.1");
  EXPECT_EQ(shortest(2.0), "2");
}

TEST(Serialize, SequenceSpecs) {
  auto s = parse_sequence(Json::parse(R"({"kind":"gevrey","s":2,"K":64})"));
  EXPECT_EQ(s.kind, SequenceSpec::Kind::gevrey);
  EXPECT_EQ(s.s, 2.0);
  EXPECT_EQ(s.K, 64);
  const auto back = parse_sequence(to_json(s));
  EXPECT_EQ(back.K, 64);

  s = parse_sequence(Json::parse(R"({"kind":"table","M":[1,1,2,6]})"));
  EXPECT_FALSE(s.table_is_log);
  EXPECT_EQ(s.K, 3);
  EXPECT_THROW(parse_sequence(Json::parse(R"({"kind":"table","M":[1],"logM":[0]})")), InputError);

  s = parse_sequence(Json::parse(R"({"kind":"from_omega","omega":{"kind":"power","a":0.5},"rho":2})"));
  EXPECT_EQ(s.omega.kind, WeightFunctionSpec::Kind::power);
  EXPECT_EQ(s.omega.param, 0.5);
  EXPECT_EQ(s.rho, 2.0);
}

TEST(Serialize, UnknownKeysRejected) {
  try {
    parse_base(Json::parse(R"({"kind":"linear","step":2,"stpe":3})"));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("stpe"), std::string::npos);
  }
  EXPECT_THROW(parse_weight_function(Json::parse(R"({"kind":"linear","a":1})")), InputError);
  EXPECT_THROW(parse_function(Json::parse(R"({"kind":"cos"})")), InputError);
}

TEST(Serialize, PolyCoefficients) {
  const auto f = parse_function(Json::parse(R"({"kind":"poly","coeffs":{"2,1":1.5,"0,3":-1}})"));
  EXPECT_EQ(f.dimension, 2);
  EXPECT_EQ(f.coeffs.at(std::vector<int>{2, 1}), 1.5);
  EXPECT_THROW(parse_function(Json::parse(R"({"kind":"poly","coeffs":{"2,1":1,"3":1}})")), InputError);
  EXPECT_THROW(parse_function(Json::parse(R"({"kind":"poly","coeffs":{"a,1":1}})")), InputError);
  const auto back = parse_function(to_json(f));
  EXPECT_EQ(back.coeffs, f.coeffs);
}

TEST(Serialize, BaseKinds) {
  EXPECT_EQ(parse_base(Json::parse(R"({"kind":"geometric","b":3})")).step, 3);
  const auto l = parse_base(Json::parse(R"({"kind":"list","k":[0,1,4,9]})"));
  EXPECT_EQ(l.list, (std::vector<long long>{0, 1, 4, 9}));
  EXPECT_THROW(parse_base(Json::parse(R"({"kind":"list","k":[0,1.5]})")), InputError);
}

TEST(Serialize, Csv) {
  CsvWriter w({"a", "b"});
  w.cell(std::string("x,y")).cell(1.5);
  w.end_row();
  w.cell(true).cell(3);
  w.end_row();
  EXPECT_EQ(w.str(), "a,b\n\"x,y\",1.5\ntrue,3\n");
}

TEST(Serialize, DumpEndsWithNewline) {
  const auto s = dump(Json{{"b", 1}, {"a", 2}});
  EXPECT_EQ(s.back(), '\n');
  EXPECT_LT(s.find("\"b\""), s.find("\"a\""));
}
