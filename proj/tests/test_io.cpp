#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paraclass/io.hpp"
#include "paraclass/samples.hpp"

using namespace paraclass;

TEST_CASE("scalar serialization") {
  CHECK(scalar_to_json(Rat(5)) == json(5));
  CHECK(scalar_to_json(Rat(-7, 3)) == json("-7/3"));
  CHECK(scalar_from_json<Rat>(json("3/6")) == Rat(1, 2));
  CHECK(scalar_from_json<Rat>(json(-4)) == Rat(-4));
  CHECK_THROWS_AS(scalar_from_json<Rat>(json(0.5)), ValidationError);
  CHECK(scalar_from_json<double>(json(0.5)) == 0.5);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("tensor document round trip") {
  auto sp = make_standard<Rat>(2);
  FTensor<Rat> f = random_admissible(sp, 3);
  json doc = tensor_document(f);
  ParsedInput<Rat> in = parse_input<Rat>(doc);
  CHECK(in.f == f);
  CHECK_FALSE(in.projected);
  // byte determinism of serialization
  CHECK(tensor_document(f).dump(2) == doc.dump(2));
}

TEST_CASE("operator documents") {
  ExampleParams<Rat> p51{
      "5.1", {{"a", Rat(1)}, {"b", Rat(0)}, {"c", Rat(0)}, {"d", Rat(0)}}};
  auto [sp, ops, f] = example(p51);
  json doc;
  doc["n"] = 2;
  doc["scalars"] = "rational";
  json a = json::array();
  for (const auto& m : ops.a) a.push_back(matrix_to_json(m));
  doc["F"] = {{"kind", "operators"}, {"A", a}, {"A_xi", matrix_to_json(ops.a_xi)}};
  ParsedInput<Rat> in = parse_input<Rat>(doc);
  CHECK(in.f == f);
  CHECK(classify(in.f).label == "F_3");

  // A_xi omitted: derived from the vertical-part constraint
  ExampleParams<Rat> p52{"5.2",
                         {{"a", Rat(1)},
                          {"b", Rat(2)},
                          {"c", Rat(3)},
                          {"d", Rat(4)},
                          {"e", Rat(5)},
                          {"f", Rat(6)}}};
  auto [sp2, ops2, f2] = example(p52);
  json doc2;
  doc2["n"] = 2;
  json a2 = json::array();
  for (const auto& m : ops2.a) a2.push_back(matrix_to_json(m));
  doc2["F"] = {{"kind", "operators"}, {"A", a2}};
  ParsedInput<Rat> in2 = parse_input<Rat>(doc2);
  CHECK(in2.f == f2);
  CHECK(extract_operators(in2.f).a_xi == ops2.a_xi);

  // inconsistent family is rejected with the violated constraint named
  json bad = doc;
  bad["F"]["A"][0][0][0] = 1;
  CHECK_THROWS_AS(parse_input<Rat>(bad), ValidationError);
}

TEST_CASE("admissibility gate") {
  auto sp = make_standard<Rat>(1);
  json doc;
  doc["n"] = 1;
  json vals = json::array();
  for (int a = 0; a < 3; ++a) {
    json plane = json::array();
    for (int b = 0; b < 3; ++b) {
      json row = json::array();
      for (int c = 0; c < 3; ++c) row.push_back(0);
      plane.push_back(row);
    }
    vals.push_back(plane);
  }
  vals[0][0][1] = 1;  // breaks antisymmetry: F(e,e,phi e) without the mirror
  doc["F"] = {{"kind", "tensor"}, {"values", vals}};

  CHECK_THROWS_AS(parse_input<Rat>(doc), ValidationError);

  doc["admit"] = true;
  ParsedInput<Rat> in = parse_input<Rat>(doc);
  CHECK(in.projected);
  CHECK(in.projection_distance > 0);
  CHECK(check_admissible(in.f).empty());
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_input<Rat>(json::array()), ValidationError);
  json no_n;
  no_n["F"] = {{"kind", "tensor"}, {"values", json::array()}};
  CHECK_THROWS_AS(parse_input<Rat>(no_n), ValidationError);
  json bad_mode;
  bad_mode["n"] = 1;
  bad_mode["scalars"] = "float";
  bad_mode["F"] = {{"kind", "tensor"}, {"values", json::array()}};
  CHECK_THROWS_AS(parse_input<Rat>(bad_mode), ValidationError);
  json bad_kind;
  bad_kind["n"] = 1;
  bad_kind["F"] = {{"kind", "mystery"}};
  CHECK_THROWS_AS(parse_input<Rat>(bad_kind), ValidationError);
}

TEST_CASE("explicit structure") {
  auto s = standard_structure<Rat>(1);
  json doc;
  doc["n"] = 1;
  doc["structure"] = {{"g", matrix_to_json(s.g)},
                      {"phi", matrix_to_json(s.phi)},
                      {"xi", vector_to_json(s.xi)},
                      {"eta", vector_to_json(s.eta)}};
  json vals = json::array();
  for (int a = 0; a < 3; ++a) {
    json plane = json::array();
    for (int b = 0; b < 3; ++b) {
      json row = json::array();
      for (int c = 0; c < 3; ++c) row.push_back(0);
      plane.push_back(row);
    }
    vals.push_back(plane);
  }
  doc["F"] = {{"kind", "tensor"}, {"values", vals}};
  ParsedInput<Rat> in = parse_input<Rat>(doc);
  CHECK(in.s->basis_kind == BasisKind::standard_phi_basis);
  CHECK(in.f.is_zero_tensor());

  json broken = doc;
  broken["structure"]["g"][2][2] = -1;
  CHECK_THROWS_AS(parse_input<Rat>(broken), ValidationError);
}

TEST_CASE("report serialization") {
  ExampleParams<Rat> p51{
      "5.1", {{"a", Rat(1)}, {"b", Rat(0)}, {"c", Rat(0)}, {"d", Rat(0)}}};
  auto [sp, ops, f] = example(p51);
  ClassificationReport<Rat> rep = classify(f);
  json j = report_to_json<Rat>(rep);
  CHECK(j["label"] == "F_3");
  CHECK(j["self_ips"][2] == json(8));
  CHECK(j["flags"][2] == true);
  CHECK(report_to_json<Rat>(rep).dump(2) == j.dump(2));

  std::string text = report_to_text(rep);
  CHECK(text.find("label: F_3") != std::string::npos);
  CHECK(text.find("F3") != std::string::npos);
}
