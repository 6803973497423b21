#include <gtest/gtest.h>

#include "expander/construction.hpp"
#include "expander/error.hpp"
#include "expander/json_io.hpp"

using namespace expander;

TEST(JsonIo, FamilyRoundTrip)
{
  const Construction c = construct_family(LocalGroupSpec{}, 2);
  const Json j = to_json(c.family);
  EXPECT_EQ(j["schema_version"], schema_version);
  const GeneratingFamily back = family_from_json(j);
  EXPECT_EQ(back.elements, c.family.elements);
  EXPECT_EQ(back.degree, 49u);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  Json bad = j;
  bad["schema_version"] = 99;
  EXPECT_THROW(family_from_json(bad), InvalidArgument);
}

TEST(JsonIo, BsgsRoundTrip)
{
  const Bsgs b = Bsgs::build({parse_cycles("(0 1 2)", 5), parse_cycles("(0 1 2 3 4)", 5)});
  const Json j = to_json(b);
  EXPECT_EQ(j["order"], "60");
  EXPECT_EQ(bsgs_from_json(j).order(), 60);
  Json wrong = j;
  wrong["order"] = "61";
  EXPECT_THROW(bsgs_from_json(wrong), CertificationFailure);
}
