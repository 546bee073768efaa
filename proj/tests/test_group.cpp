#include <gtest/gtest.h>

#include "pcp/group.hpp"

namespace {

using namespace pcp;

TEST(Cyclic, Trivial) {
  GroupModel g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(validate_group(g).ok());
}

TEST(Cyclic, OrderTwo) {
  GroupModel g = make_cyclic(2);
  EXPECT_EQ(g.table, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
}

TEST(Cyclic, OrderThreeIsAdditionMod3) {
  GroupModel g = make_cyclic(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(g.table[i][j], (i + j) % 3);
  EXPECT_TRUE(validate_group(g).ok());
}

TEST(Cyclic, ZeroRejected) { EXPECT_THROW(make_cyclic(0), std::runtime_error); }

TEST(Validate, ConstructorsAlwaysValid) {
  for (size_t n = 1; n <= 8; ++n) EXPECT_TRUE(validate_group(make_cyclic(n)).ok()) << n;
  for (size_t n = 1; n <= 4; ++n) EXPECT_TRUE(validate_group(make_symmetric(n)).ok()) << n;
  EXPECT_TRUE(validate_group(direct_product(make_cyclic(2), make_cyclic(3))).ok());
  EXPECT_TRUE(validate_group(direct_product(make_symmetric(3), make_cyclic(2))).ok());
  EXPECT_TRUE(validate_group(GroupModel::integers()).ok());
}

TEST(Validate, BrokenAssociativityHasWitness) {
  GroupModel g = make_cyclic(4);
  g.table[1][1] = 3;  // g*g is now g^3: still a Latin square, not associative
  auto rep = validate_group(g);
  EXPECT_FALSE(rep.ok());
  bool assoc_issue = false;
  for (const auto& i : rep.issues)
    if (i.check == "associativity" && !i.witness.empty()) assoc_issue = true;
  EXPECT_TRUE(assoc_issue) << rep.str();
}

TEST(Validate, BrokenLatinSquare) {
  GroupModel g = make_cyclic(3);
  g.table[1][2] = 1;  // duplicate in row
  EXPECT_FALSE(validate_group(g).ok());
}

TEST(SubgroupClosure, CyclicSix) {
  GroupModel g = make_cyclic(6);
  auto h = subgroup_closure(g, {2});
  EXPECT_EQ(h, (std::vector<GElem>{0, 2, 4}));
}

TEST(SubgroupClosure, EmptyGivesIdentity) {
  auto h = subgroup_closure(make_symmetric(3), {});
  EXPECT_EQ(h, (std::vector<GElem>{0}));
}

TEST(SubgroupClosure, GeneratorGivesWhole) {
  auto h = subgroup_closure(make_cyclic(2), {1});
  EXPECT_EQ(h, (std::vector<GElem>{0, 1}));
}

TEST(SubgroupClosure, OutputIsSubgroup) {
  GroupModel s4 = make_symmetric(4);
  for (GElem a = 0; a < static_cast<GElem>(s4.order()); a += 5)
    for (GElem b = 0; b < static_cast<GElem>(s4.order()); b += 7) {
      auto h = subgroup_closure(s4, {a, b});
      EXPECT_TRUE(is_subgroup(s4, h));
    }
}

TEST(SubgroupClosure, IntegerGroupRejected) {
  EXPECT_THROW(subgroup_closure(GroupModel::integers(), {2}), std::runtime_error);
}

TEST(AllSubgroups, S3HasSix) {
  auto subs = all_subgroups(make_symmetric(3));
  EXPECT_EQ(subs.size(), 6u);  // 1, three C2, C3, S3
  for (const auto& h : subs) EXPECT_TRUE(is_subgroup(make_symmetric(3), h));
}

TEST(AllSubgroups, C4HasThree) {
  auto subs = all_subgroups(make_cyclic(4));
  EXPECT_EQ(subs.size(), 3u);  // 1, C2, C4
}

TEST(Integers, Basics) {
  GroupModel z = GroupModel::integers();
  EXPECT_EQ(z.op(3, -5), -2);
  EXPECT_EQ(z.inv(7), -7);
  EXPECT_EQ(z.identity(), 0);
  EXPECT_THROW(z.elements(), std::runtime_error);
}

}  // namespace
