#include "fano/registry.hpp"

#include <gtest/gtest.h>

using namespace fano;

TEST(Registry, AcceptsNamedClasses) {
  auto y5 = validate(2, 5);
  EXPECT_EQ(y5.name(), "Y5");
  EXPECT_FALSE(y5.genus().has_value());

  auto x22 = validate(1, 22);
  EXPECT_EQ(x22.name(), "X22");
  EXPECT_EQ(x22.genus(), 12);

  auto p3 = validate(4, 1);
  EXPECT_EQ(p3.name(), "P3");
  EXPECT_EQ(validate(3, 2).name(), "Q3");
}

TEST(Registry, RejectsWithReason) {
  try {
    validate(1, 20);
    FAIL() << "genus 11 accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("genus 11"), std::string::npos);
  }
  EXPECT_THROW(validate(1, 21), ValidationError);  // odd degree
  EXPECT_THROW(validate(1, 24), ValidationError);  // g = 13
  EXPECT_THROW(validate(2, 6), ValidationError);
  EXPECT_THROW(validate(3, 1), ValidationError);
  EXPECT_THROW(validate(4, 2), ValidationError);
  EXPECT_THROW(validate(5, 1), ValidationError);
  EXPECT_THROW(validate(0, 1), ValidationError);
  EXPECT_THROW(validate(1, 0), ValidationError);
  EXPECT_THROW(validate_genus(1), ValidationError);
  EXPECT_EQ(validate_genus(8), validate(1, 14));
}

TEST(Registry, EnumerationYieldsExactlySeventeen) {
  std::vector<FanoDescriptor> accepted;
  for (int i = 1; i <= 4; ++i)
    for (int d = 1; d <= 30; ++d) {
      try {
        accepted.push_back(validate(i, d));
      } catch (const ValidationError&) {
      }
    }
  EXPECT_EQ(accepted.size(), 17u);
  auto all = all_descriptors();
  ASSERT_EQ(all.size(), 17u);
  std::sort(accepted.begin(), accepted.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(accepted, all);
}

TEST(Registry, IndexOneGenusRelation) {
  int count = 0;
  for (const auto& f : all_descriptors()) {
    if (f.index() != 1) continue;
    ++count;
    EXPECT_EQ(f.degree() % 2, 0);
    EXPECT_EQ(f.degree() / 2 + 1, *f.genus());
  }
  EXPECT_EQ(count, 10);
}

TEST(Registry, Descriptions) {
  EXPECT_NE(describe(validate(2, 4)).text.find("intersection of two 4-dimensional quadrics"), std::string::npos);
  EXPECT_NE(describe(validate(1, 14)).text.find("linear section of codimension 5 of Gr(2,6)"), std::string::npos);
  EXPECT_NE(describe(validate(1, 2)).text.find("double covering"), std::string::npos);
  EXPECT_NE(describe(validate(1, 2)).text.find("ramified in a sextic"), std::string::npos);
  auto d = describe(validate(1, 22));
  EXPECT_EQ(d.index, 1);
  EXPECT_EQ(d.degree, 22);
  EXPECT_EQ(d.genus, 12);
  for (const auto& f : all_descriptors()) EXPECT_FALSE(describe(f).text.empty());
}
