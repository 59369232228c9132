#include <gtest/gtest.h>

#include <tropichinese/json_io.hpp>

#include "support.hpp"

using namespace tropichinese;
using tropichinese::testing::U;

TEST(Json, ScalarAndMatrix) {
  EXPECT_EQ(to_json(kBottom), Json("-inf"));
  EXPECT_EQ(to_json(TropScalar(-4)), Json(-4));
  auto const m = U(1, 0, 2);
  auto const j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"dim":2,"entries":[[1,0],["-inf",2]]})");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(scalar_from_json(Json("inf")), ParseError);
  EXPECT_THROW(scalar_from_json(Json(1.5)), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim":2,"entries":[[1]]})")), ParseError);
}

TEST(Json, BlockDiagRoundTrip) {
  BlockDiagMatrix const b({U(1, 0, 0), U(0, 3, 1)});
  EXPECT_EQ(blockdiag_from_json(to_json(b)), b);
  EXPECT_THROW(blockdiag_from_json(Json::parse(R"({"blocks":3})")), ParseError);
}

TEST(Json, TupleEncoding) {
  auto const k = ExponentTuple::from_entries(3, {{2, 1, 2}, {3, 3, 1}});
  EXPECT_EQ(to_json(k).dump(), R"({"k":[[2,1,2],[3,3,1]],"rank":3})");
  EXPECT_EQ(tuple_from_json(to_json(k)), k);
  EXPECT_EQ(tuple_from_json(to_json(ExponentTuple(4))), ExponentTuple(4));
  EXPECT_THROW(tuple_from_json(Json::parse(R"({"rank":3,"k":[[1,2,1]]})")), ParseError);
  EXPECT_THROW(tuple_from_json(Json::parse(R"({"rank":3,"k":[[1,1]]})")), ParseError);
}

TEST(Json, RepresentationRoundTrip) {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto const rep = build_rep(n);
    auto const j = to_json(rep);
    EXPECT_EQ(j.at("block_count"), rep.block_count());
    EXPECT_EQ(representation_from_json(j), rep);
  }
  EXPECT_EQ(to_json(build_rep(5)).at("lift_order").dump(), R"([1,2,"n-1"])");
  EXPECT_EQ(to_json(build_rep(3)).at("lift_order").dump(), "[]");
  EXPECT_THROW(representation_from_json(Json::parse(R"({"rank":2,"generators":{}})")), ParseError);
}

TEST(Json, AffineMapRoundTrip) {
  auto const map = affine_of_rep(4);
  auto const j = to_json(map);
  EXPECT_EQ(j.at("rows").size(), 27u);
  EXPECT_EQ(j.at("rows")[1].at("position"), "12");
  EXPECT_EQ(affine_from_json(j), map);
  auto const r0 = to_json(affine_of_rep(3)).at("rows")[0];
  EXPECT_EQ(r0.at("coeffs").dump(), R"({"k_11":1,"k_21":1,"k_31":1})");
  EXPECT_EQ(coeff_key(12, 10, 3), "k_10_3");
}

TEST(Json, SelectionRoundTrip) {
  auto const sel = select_blocks(affine_of_rep(4));
  EXPECT_EQ(selection_from_json(to_json(sel)), sel);
  EXPECT_THROW(selection_from_json(Json::parse(R"({"selected":[1]})")), ParseError);
}
