#include <doctest.h>

#include <sstream>

#include "rloop/analysis.hpp"
#include "rloop/error.hpp"
#include "rloop/fixtures.hpp"
#include "rloop/table_io.hpp"

using namespace rloop;

TEST_CASE("table file round trip") {
  for (const RightLoopTable& t :
       {fixtures::alt4_expected_table(), fixtures::d18_expected_table(),
        fixtures::order4_center2(), cayley_table(PermGroup::cyclic(4))}) {
    std::stringstream buf(table_to_string(t));
    RightLoopTable back = read_table(buf);
    CHECK(back.rows() == t.rows());
    CHECK(back.labels() == t.labels());
  }
}

TEST_CASE("table files may put the identity anywhere") {
  std::stringstream in(
      "# identity is the second element\n"
      "rightloop 3 identity=e\n"
      "b e a\n"
      "e a b\n"
      "a b e\n");
  RightLoopTable t = read_table(in);
  CHECK(t.size() == 3);
  CHECK(t.label(0) == "e");
  CHECK(t.mul(0, 1) == 1);
  CHECK(t.is_group());  // this is Z3 relabeled
}

TEST_CASE("table parse failures") {
  auto parse = [](const std::string& text) {
    std::stringstream in(text);
    return read_table(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("rightloop x identity=1\n"), ParseError);
  CHECK_THROWS_AS(parse("rightloop 2 identity=1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("rightloop 2 identity=1\n1 2 3\n2 1 1\n"), ParseError);
  // declared identity missing from the table
  CHECK_THROWS_AS(parse("rightloop 2 identity=q\n1 2\n2 1\n"), ValidationError);
  // column axiom broken: exits with an axiom violation, not a parse error
  CHECK_THROWS_AS(parse("rightloop 3 identity=1\n1 2 3\n2 3 3\n3 1 2\n"), ValidationError);
}

TEST_CASE("group spec parsing") {
  std::stringstream in(
      "# six-point spec\n"
      "degree 6\n"
      "generators (4,6,5) (1,3,2) (1,4)(2,6,3,5)\n"
      "subgroup (2,3)(5,6)\n"
      "transversal () (1,3,2)\n");
  GroupSpec spec = read_group_spec(in);
  CHECK(spec.degree == 6);
  CHECK(spec.generators.size() == 3);
  CHECK(spec.subgroup_generators.size() == 1);
  CHECK(spec.transversal.size() == 2);
  CHECK(spec.transversal[0].is_identity());

  std::stringstream bad("generators (1,2)\n");
  CHECK_THROWS_AS(read_group_spec(bad), ParseError);
  std::stringstream out_of_range("degree 3\ngenerators (1,4)\n");
  CHECK_THROWS_AS(read_group_spec(out_of_range), ParseError);
}

TEST_CASE("build_transversal defaults") {
  // no subgroup and no transversal: the Cayley table of the group
  std::stringstream in("degree 4\ngenerators (1,2,3,4)\n");
  TransversalSpec ts = build_transversal(read_group_spec(in));
  CHECK(ts.subgroup.order() == 1);
  CHECK(ts.transversal.size() == 4);
  RightLoopTable t = induced_table(ts);
  CHECK(t.is_group());

  // subgroup given, transversal defaulted to least representatives
  std::stringstream in2("degree 4\ngenerators (1,2,3) (2,3,4)\nsubgroup (1,2)(3,4)\n");
  TransversalSpec ts2 = build_transversal(read_group_spec(in2));
  CHECK(ts2.ambient.order() == 12);
  CHECK(ts2.transversal.size() == 6);
  CHECK(is_nrt(ts2).ok);
  induced_table(ts2);
}

TEST_CASE("analysis JSON is well formed") {
  // smoke: the JSON printer runs and contains the record fields
  RightLoopTable t = fixtures::order4_center2();
  rloop::AnalysisReport report = rloop::analyze(t);
  std::string json = rloop::to_json(report, t);
  for (const char* key :
       {"\"gss_order\"", "\"gs_order\"", "\"sigma1\"", "\"center\"", "\"simple\"",
        "\"is_loop\"", "\"is_group\"", "\"statements\"", "\"gss_quasiprimitive\""})
    CHECK(json.find(key) != std::string::npos);
}
