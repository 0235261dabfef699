#include <gtest/gtest.h>

#include "amds/json_io.hpp"

using namespace amds;

TEST(Json, RoundTripIsByteIdentical) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{{"A3~", 8}, {"D4~", 6}, {"A2", 6}}) {
    CoeffTable tab = compute_table(parse_type(name), B);
    std::string a = dump_canonical(table_to_json(tab));
    CoeffTable back = table_from_json(parse_json_text(a));
    EXPECT_EQ(back.entries, tab.entries);
    EXPECT_EQ(back.diag.values, tab.diag.values);
    EXPECT_EQ(dump_canonical(table_to_json(back)), a);
  }
}

TEST(Json, SchemaShape) {
  CoeffTable tab = compute_table(parse_type("A3~"), 2);
  Json j = table_to_json(tab);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["type"], "A3~");
  EXPECT_EQ(j["bound"], 2);
  EXPECT_EQ(j["coefficients"][0]["index"], Json::array({0, 0, 0, 0}));
  EXPECT_EQ(j["coefficients"][0]["q_poly"], Json::parse(R"({"0":1})"));
  std::string text = dump_canonical(j);
  EXPECT_EQ(text.find('.'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Json, HalfExponentsAndBigIntegers) {
  QLaurent c = QLaurent::monomial(static_cast<Int>(1) << 80, 3) + QLaurent::monomial(-2, -1);
  Json j = qpoly_to_json(c);
  EXPECT_TRUE(j["3"].is_string());
  EXPECT_EQ(j["-1"], -2);
  EXPECT_EQ(qpoly_from_json(j, ""), c);
  EXPECT_EQ(j.begin().key(), "-1");
}

namespace {

std::string error_of(const std::string& text) {
  try {
    table_from_json(parse_json_text(text));
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Json, ErrorsCarryPointers) {
  EXPECT_EQ(error_of(R"({"schema_version":2,"type":"A3~","bound":1,"coefficients":[]})").rfind("/schema_version:", 0), 0u);
  EXPECT_EQ(error_of(R"({"schema_version":1,"type":"A4~","bound":1,"coefficients":[]})").rfind("/type:", 0), 0u);
  EXPECT_EQ(error_of(R"({"schema_version":1,"type":"A3~","coefficients":[]})").rfind("/bound:", 0), 0u);
  EXPECT_EQ(error_of(R"({"schema_version":1,"type":"A3~","bound":1,"coefficients":[{"index":[0,0,0],"q_poly":{"0":1}}]})")
                .rfind("/coefficients/0/index:", 0),
            0u);
  EXPECT_EQ(error_of(R"({"schema_version":1,"type":"A3~","bound":1,"coefficients":[{"index":[0,0,0,0],"q_poly":{"0":1.5}}]})")
                .rfind("/coefficients/0/q_poly/0:", 0),
            0u);
  EXPECT_EQ(error_of(R"({"schema_version":1,"type":"A3~","bound":1,"coefficients":[{"index":[0,0,0,0],"q_poly":{"x":1}}]})")
                .rfind("/coefficients/0/q_poly/x:", 0),
            0u);
  EXPECT_EQ(error_of(R"({"schema_version":1,"type":"A3~","bound":1,"coefficients":[{"index":[2,0,0,0],"q_poly":{"0":1}}]})")
                .rfind("/coefficients/0/index:", 0),
            0u);
  EXPECT_EQ(error_of("{not json").rfind("/:", 0), 0u);
}

TEST(Json, ZetaProductExport) {
  ZetaProduct z(2);
  z.add(2, {1, 0}, 1);
  z.add(0, {1, 1}, -3);
  Json j = zeta_to_json(z);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["q_half"], 2);
  EXPECT_EQ(j[0]["nu"], Json::array({1, 0}));
  EXPECT_EQ(j[1]["lambda"], -3);
}
