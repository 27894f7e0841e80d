#include <gtest/gtest.h>

#include "twring/gl2_case.hpp"
#include "twring/serialize.hpp"

using namespace twring;

TEST(Serialize, GroupRoundTrip) {
  auto g = dihedral8();
  json j = group_to_json(*g);
  auto h = group_from_json(j);
  EXPECT_EQ(h->table(), g->table());
  EXPECT_EQ(h->label(5), g->label(5));
  EXPECT_EQ(group_from_json(json::parse(R"({"preset": "cyclic", "params": [5]})"))->order(), 5);
  EXPECT_THROW(group_from_json(json::parse(R"({"table": [[0,1],[1,1]]})")), Error);
  EXPECT_THROW(group_from_json(json::parse(R"({"preset": "dihedral8"})"), 4), CapExceeded);
  EXPECT_THROW(group_from_json(json::parse(R"({"labels": []})")), Error);
}

TEST(Serialize, CocycleAndRing) {
  Cocycle q = q8_twist();
  Cocycle back = cocycle_from_json(cocycle_to_json(q), q.group);
  EXPECT_EQ(back, q);
  RingPtr r = ring_from_json(json::parse(
      R"({"group": {"preset": "elementary_abelian_2", "params": [2]}, "cocycle": {"named": "relations"}})"));
  EXPECT_TRUE(r->same_as(*c2c2_ring()) || r->cocycle() == c2c2_ring()->cocycle());
  EXPECT_THROW(ring_from_json(json::parse(R"({"group": {"preset": "cyclic", "params": [2]}, "conductor": 48})")),
               CapExceeded);
}

TEST(Serialize, Elements) {
  RingPtr r = c2c2_ring();
  TwElement v = element_from_json(r, json::parse("[1, 0, 1, -1]"));
  EXPECT_EQ(v, unit_v());
  EXPECT_EQ(element_from_json(r, element_to_json(v)), v);
  EXPECT_EQ(element_from_json(r, json::parse(R"({"terms": {"1": 1, "h": 1, "gh": -1}})")), v);
  EXPECT_THROW(element_from_json(r, json::parse(R"({"terms": {"q": 1}})")), Error);
}

TEST(Serialize, ExtensionAndReport) {
  auto e = extension_from_json(json::parse(R"({"group": {"preset": "dihedral8"}, "normal": [0, 2]})"));
  EXPECT_EQ(e.quotient()->order(), 4);
  EXPECT_THROW(extension_from_json(json::parse(R"({"group": {"preset": "dihedral8"}, "normal": [0, 4]})")), Error);
  Report rep;
  rep.command = "x";
  rep.add("b", "2", Status::verified);
  rep.add("a", "1", Status::refuted, "0", "paper");
  rep.finalize();
  json j = report_to_json(rep);
  EXPECT_EQ(j["items"][0]["name"], "a");
  EXPECT_EQ(j["items"][0]["status"], "refuted");
  EXPECT_TRUE(j["items"][1]["paper_claim"].is_null());
  EXPECT_TRUE(rep.any_refuted());
}

TEST(Serialize, SpecFormats) {
  auto g = group_from_json(json::parse(R"({"order": 2, "mul": [[0,1],[1,0]]})"));
  EXPECT_EQ(g->order(), 2);
  EXPECT_THROW(group_from_json(json::parse(R"({"order": 3, "mul": [[0,1],[1,0]]})")), Error);
  Cocycle q = q8_twist();
  RingPtr R = make_ring(q.group, q, 4);
  // 2 u_1 + (1 + 3 i) u_x
  TwElement x = element_from_json(R, json::parse(R"({"coeffs": [{"g": 0, "m": 1, "c": [2]}, {"g": 1, "m": 4, "c": [1, 3]}]})"));
  TwElement want = TwElement::basis(R, 0, 2) + TwElement::basis(R, 1, CycInt(4, 1) + CycInt::root(4, 4, 1).scaled(3));
  EXPECT_EQ(x, want);
  EXPECT_THROW(element_from_json(R, json::parse(R"({"coeffs": [{"g": 0, "m": 3, "c": [0, 1]}]})")), Error);
  EXPECT_THROW(element_from_json(R, json::parse(R"({"coeffs": [{"g": 9, "c": [1]}]})")), Error);
}
