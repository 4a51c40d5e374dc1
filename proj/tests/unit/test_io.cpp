#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rbg/catalog.hpp"
#include "rbg/io.hpp"

using namespace rbg;

TEST_CASE("group JSON roundtrip") {
  for (const char* name : {"Z1", "Z6", "S3", "D4", "Q8", "Z2xS3"}) {
    const FiniteGroup g = make_group(name);
    const json j = group_to_json(g);
    const FiniteGroup back = group_from_json(json::parse(j.dump()));
    CHECK(back.same_table(g));
    for (Elem x = 0; x < g.order(); ++x) CHECK(back.label(x) == g.label(x));
  }
}

TEST_CASE("groups load from files") {
  const std::string path = "rbg_io_test_group.json";
  {
    std::ofstream out(path);
    out << group_to_json(make_group("D4")).dump();
  }
  CHECK(load_group(path).same_table(make_group("D4")));
  CHECK(make_group(path).same_table(make_group("D4")));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), InvalidInput);
}

TEST_CASE("malformed group tables are rejected") {
  json j{{"order", 2}, {"identity", 0}, {"table", {{0, 1}, {1, 1}}}};
  CHECK_THROWS(group_from_json(j));
  j["table"] = {{0, 1}};
  CHECK_THROWS_AS(group_from_json(j), InvalidInput);
  j = json{{"order", 2}, {"identity", 1}, {"table", {{0, 1}, {1, 0}}}};
  CHECK_THROWS_AS(group_from_json(j), InvalidInput);
}

TEST_CASE("operator JSON with labels and indices") {
  const FiniteGroup s3 = make_group("S3");
  const json by_label = json::parse(R"j({"group": "S3", "images": ["e","(1,2)","(1,3)","(2,3)","(1,3,2)","(1,2,3)"]})j");
  const RotaBaxterOperator r = operator_from_json(by_label);
  CHECK(r.images == Table{0, 1, 2, 3, 5, 4});
  const RotaBaxterOperator again = operator_from_json(json::parse(operator_to_json("S3", r.images).dump()));
  CHECK(again.images == r.images);
  // inline group table
  const RotaBaxterOperator inl = operator_from_json(operator_to_json(group_to_json(s3), r.images));
  CHECK(inl.images == r.images);

  CHECK_THROWS_AS(operator_from_json(json::parse(R"j({"group": "S3", "images": [0,1]})j")), InvalidInput);
  CHECK_THROWS_AS(operator_from_json(json::parse(R"j({"group": "S3", "images": ["e","(1,4)",0,0,0,0]})j")),
                  InvalidInput);
  CHECK_THROWS_AS(operator_from_json(json::parse(R"j({"group": "S3", "images": [0,1,2,3,4,5]})j")),
                  LawViolation);
  CHECK_THROWS_AS(operator_from_json(json::parse(R"j({"images": []})j")), InvalidInput);
}

TEST_CASE("cochain JSON roundtrip") {
  Cochain c(2, 4);
  c.set({1, 3}, 2);
  c.set({3, 2}, 1);
  const json j = cochain_to_json(c);
  CHECK(j.dump() == R"j({"arity":2,"values":{"(1,3)":2,"(3,2)":1}})j");
  CHECK(cochain_from_json(json::parse(j.dump()), 4) == c);
  CHECK_THROWS_AS(cochain_from_json(json::parse(R"j({"arity":2,"values":{"1,3":2}})j"), 4), InvalidInput);
  CHECK_THROWS_AS(cochain_from_json(json::parse(R"j({"values":{}})j"), 4), InvalidInput);
}

TEST_CASE("shipped operator fixtures load and verify") {
  for (const char* name : {"S3_R1", "S3_R2", "S3_R3", "S3_R4", "S3_R5", "S3_R6", "S3_R7", "D4_R1",
                           "D4_R2", "D4_R3", "Q8_R1", "Q8_R2"}) {
    CAPTURE(name);
    const json j = read_json_file(std::string(RBG_FIXTURES) + "/operators/" + name + ".json");
    CHECK_NOTHROW(operator_from_json(j));
  }
}
