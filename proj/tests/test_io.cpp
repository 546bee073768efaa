#include <gtest/gtest.h>

#include "pcp/fixtures.hpp"
#include "pcp/io.hpp"

namespace {

using namespace pcp;

const FieldSpec Q = FieldSpec::rationals();

TEST(Io, ActionInstanceRoundTrip) {
  auto a = fixtures::two_idempotents_z(Q);
  std::string text = serialize_action_instance(a);
  InstanceData inst = parse_instance(text);
  ASSERT_TRUE(inst.action);
  EXPECT_TRUE(validate_action(*inst.action).ok());
  EXPECT_EQ(inst.action->support, a.support);
  for (GElem g : a.support) {
    EXPECT_TRUE(vec_eq(inst.action->one(g), a.one(g)));
    EXPECT_EQ(inst.action->alpha.at(g), a.alpha.at(g));
  }
  // serialization is deterministic
  EXPECT_EQ(serialize_action_instance(*inst.action), text);
}

TEST(Io, AlgebraInstanceRoundTrip) {
  StructureAlgebra ut = upper_triangular2(Q);
  std::string text = serialize_algebra_instance(Q, ut);
  InstanceData inst = parse_instance(text);
  ASSERT_TRUE(inst.algebra);
  EXPECT_EQ(inst.algebra->dim, 3u);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      EXPECT_TRUE(vec_eq(inst.algebra->basis_product(i, j), ut.basis_product(i, j)));
  EXPECT_EQ(serialize_algebra_instance(Q, *inst.algebra), text);
}

TEST(Io, GlobalInstanceRoundTrip) {
  GlobalAction b = fixtures::twisted_swap_c2(Q);
  std::string text = serialize_global_instance(b);
  InstanceData inst = parse_instance(text);
  ASSERT_TRUE(inst.global);
  EXPECT_TRUE(validate_global(*inst.global).ok());
  EXPECT_TRUE(inst.global->has_nontrivial_twist());
  EXPECT_EQ(serialize_global_instance(*inst.global), text);
}

TEST(Io, TriangularInstanceRoundTrip) {
  auto K = std::make_shared<StructureAlgebra>(field_algebra(Q));
  Bimodule bm;
  bm.left_algebra = K;
  bm.right_algebra = K;
  bm.dim = 1;
  bm.left_act.push_back(ExactMatrix::identity(1, Q));
  bm.right_act.push_back(ExactMatrix::identity(1, Q));
  TriangularAlgebra L = assemble_triangular(bm);
  std::string text = serialize_triangular_instance(L, std::nullopt);
  InstanceData inst = parse_instance(text);
  ASSERT_TRUE(inst.triangular);
  EXPECT_EQ(inst.triangular->algebra->dim, 3u);
  EXPECT_TRUE(validate_algebra(*inst.triangular->algebra).ok());
}

TEST(Io, PrimeFieldInstance) {
  FieldSpec f5 = FieldSpec::prime_field(5);
  std::string text = serialize_algebra_instance(f5, dual_numbers(f5));
  InstanceData inst = parse_instance(text);
  EXPECT_EQ(inst.field.p, 5u);
  EXPECT_EQ(inst.algebra->dim, 2u);
}

TEST(Io, StrictRejectsUnknownKeys) {
  auto a = fixtures::lone_fiber_z(Q);
  std::string text = serialize_action_instance(a);
  std::string bad = text;
  bad.insert(bad.find("\"field\""), "\"extra\": 1,\n  ");
  EXPECT_THROW(parse_instance(bad), ParseError);
  InstanceData inst = parse_instance(bad, /*lenient=*/true);
  ASSERT_EQ(inst.warnings.size(), 1u);
  EXPECT_NE(inst.warnings[0].find("extra"), std::string::npos);
}

TEST(Io, ParseErrors) {
  EXPECT_THROW(parse_instance("not json"), ParseError);
  EXPECT_THROW(parse_instance("{}"), ParseError);                       // missing format
  EXPECT_THROW(parse_instance("{\"format\":\"nope\"}"), ParseError);    // bad format
  EXPECT_THROW(parse_instance(R"({"format":"pcp-instance-v1","field":{"kind":"GF","p":4}})"),
               ParseError);  // 4 is not prime
  EXPECT_THROW(parse_instance(R"({"format":"pcp-instance-v1","field":{"kind":"Q"},
    "algebra":{"dim":1,"basis":["b"],"unit":["1"],"table":[[["1","2"]]]}})"),
               ParseError);  // wrong entry length
  EXPECT_THROW(
      parse_instance(R"({"format":"pcp-instance-v1","field":{"kind":"Q"},
    "algebra":{"dim":1,"basis":["b"],"unit":["x"],"table":[[["1"]]]}})"),
      ParseError);  // bad scalar literal
}

TEST(Io, ActionRequiresAlgebraAndGroup) {
  std::string text = R"({"format":"pcp-instance-v1","field":{"kind":"Q"},
    "action":{"support":["0"],"idempotents":{"0":["1"]},"alpha":{"0":[["1"]]}}})";
  EXPECT_THROW(parse_instance(text), ParseError);
}

TEST(Io, MissingAlphaForSupport) {
  auto a = fixtures::lone_fiber_z(Q);
  std::string text = serialize_action_instance(a);
  // add a support element with no matching alpha/idempotent
  auto pos = text.find("\"support\": [");
  std::string bad = text;
  bad.insert(pos + strlen("\"support\": ["), "\"5\", ");
  EXPECT_THROW(parse_instance(bad), ParseError);
}

TEST(Io, PairSerializeParse) {
  Restriction r = fixtures::c3_restriction(Q);
  GlobalizeResult gr = globalize(r.action);
  std::string text = serialize_pair("p.json", "g.json", gr.pair.embedding);
  PairFile pf = parse_pair_file(text);
  EXPECT_EQ(pf.partial_path, "p.json");
  EXPECT_EQ(pf.global_path, "g.json");
  EXPECT_EQ(pf.embedding_rows.size(), gr.pair.global.T().dim);
}

TEST(Io, FindingJsonLine) {
  Finding f = Finding::confirmed("artinian", "fixture=x", "claim text", "w");
  std::string line = finding_json_line(f);
  EXPECT_NE(line.find("\"artinian\""), std::string::npos);
  EXPECT_NE(line.find("\"confirmed\""), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
}

TEST(Io, BuiltCrossedProductRoundTripsThroughValidate) {
  auto a = fixtures::two_idempotents_z(Q);
  CrossedProduct cp = build_crossed(a);
  std::string text = serialize_algebra_instance(Q, cp.algebra);
  InstanceData inst = parse_instance(text);
  ASSERT_TRUE(inst.algebra);
  EXPECT_TRUE(validate_algebra(*inst.algebra).ok());
  EXPECT_EQ(inst.algebra->dim, 4u);
}

}  // namespace
