#include <gtest/gtest.h>

#include "support.hpp"

using namespace garside;
using namespace garside::testing;

TEST(GermIo, RoundTripDerivedGerms) {
  for (const auto& t : {s3_classical(), dual_germ({CoxeterFamily::A, 4}), classical_germ({CoxeterFamily::B, 2}),
                        classical_germ({CoxeterFamily::I2, 5}), dual_germ({CoxeterFamily::B, 3}), arrow_germ()}) {
    const auto text = serialize_germ(t);
    const auto back = parse_germ(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize_germ(back), text);
  }
}

TEST(GermIo, ParseErrorsNameTheField) {
  auto msg = [](const std::string& text) {
    try {
      (void)parse_germ(text);
    } catch (const StructuralError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg("{\"objects\": [\"x\"]").find("line 1"), std::string::npos);
  EXPECT_NE(msg(R"({"objects": ["x"], "identities": {"x": 0}, "products": []})").find("'elements'"),
            std::string::npos);
  EXPECT_NE(msg(R"({"objects": ["x"], "elements": [{"id": 0, "name": "1", "source": "y", "target": "x"}],
                   "identities": {"x": 0}, "products": []})")
                .find("elements[0].source"),
            std::string::npos);
  EXPECT_NE(msg(R"({"objects": ["x"], "elements": [{"id": 0, "name": "1", "source": "x", "target": "x"}],
                   "identities": {}, "products": []})")
                .find("no entry for object 'x'"),
            std::string::npos);
  EXPECT_NE(msg(R"({"objects": ["x"], "elements": [{"id": 0, "name": "1", "source": "x", "target": "x"}],
                   "identities": {"x": 0}, "products": [[0, 0, 4]]})")
                .find("products[0][2]"),
            std::string::npos);
}

TEST(GermIo, NormalFormOutputIsAFixedPoint) {
  const auto t = parse_germ(serialize_germ(s3_classical()));
  const CategoryEngine eng(t);
  const auto nf = eng.normal_form(word(t, {"a", "b", "a", "a"}));
  const auto again = eng.normal_form(word(t, names_of(t, nf.entries())));
  EXPECT_EQ(again, nf);
}
