/*
   Copyright 2026 the brauercalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "brauer/cli.hpp"
#include "brauer/io.hpp"

using namespace brauer;

namespace {

FieldPtr F(long p) { return FieldDescriptor::prime_field(p); }
FieldElement fe(const FieldPtr& f, long v) { return FieldElement::from_integer(f, v); }

struct CliOutput {
  int code;
  std::string out;
  std::string err;
};

CliOutput cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("element round trips") {
  std::mt19937_64 rng(5);
  std::vector<FieldPtr> fields{
      FieldDescriptor::rationals(),
      F(7),
      FieldDescriptor::finite_field(3, 2),
      FieldDescriptor::finite_extension(FieldDescriptor::finite_field(2, 2), 2),
      FieldDescriptor::rational_functions(F(5)),
      FieldDescriptor::gaussian_rationals(),
      FieldDescriptor::constant_extension(FieldDescriptor::rational_functions(F(3)), 2),
  };
  for (auto& f : fields) {
    // descriptor round trip
    FieldPtr back = field_from_json(field_to_json(f));
    CHECK(back->same_field(*f));
    for (int t = 0; t < 40; ++t) {
      FieldElement x = random_element(f, rng);
      FieldElement y = element_from_json(f, element_to_json(x));
      CHECK(x == y);
    }
  }
}

TEST_CASE("serialization formats") {
  // prime field values are plain integers
  CHECK(element_to_json(fe(F(5), 3)) == Json(3));
  // rationals are num/den strings with positive denominator and gcd 1
  FieldPtr q = FieldDescriptor::rationals();
  CHECK(element_to_json(FieldElement::from_rational(q, Rational(-6, 4))) == Json("-3/2"));
  CHECK(element_to_json(fe(q, 2)) == Json("2/1"));
  // extension elements are constant-first coefficient arrays
  FieldPtr f9 = FieldDescriptor::finite_field(3, 2);
  FieldElement i = FieldElement::generator(f9);
  CHECK(element_to_json(i) == Json::array({0, 1}));
  // rational functions carry a monic denominator
  FieldPtr rat = FieldDescriptor::rational_functions(F(5));
  FieldElement t = FieldElement::generator(rat);
  Json j = element_to_json(FieldElement::one(rat) / (fe(rat, 2) * t + fe(rat, 1)));
  CHECK(j.at("den").back() == Json(1));
  // non-canonical rational function literals are rejected
  Json bad;
  bad["num"] = Json::array({1});
  bad["den"] = Json::array({2});
  CHECK_THROWS_AS(element_from_json(rat, bad), ValidationError);
}

TEST_CASE("algebra round trip") {
  auto m2 = StructureConstantAlgebra::matrix_algebra(F(3), 2);
  Json j = algebra_to_json(m2);
  auto back = algebra_from_json(j);
  CHECK(back.dim() == m2.dim());
  CHECK(back.table() == m2.table());
  CHECK(back.unit() == m2.unit());
}

TEST_CASE("field name shorthands") {
  CHECK(parse_field_name("Q")->kind() == FieldKind::Rationals);
  CHECK(parse_field_name("F7")->characteristic() == 7);
  CHECK(parse_field_name("F9")->cardinality() == 9);
  CHECK(parse_field_name("F3t")->kind() == FieldKind::RationalFunctions);
  FieldPtr f93 = parse_extension_name("F9/F3");
  CHECK(f93->degree() == 2);
  CHECK(f93->is_finite());
  FieldPtr f9t = parse_extension_name("F9t/F3t");
  CHECK(f9t->degree() == 2);
  CHECK(f9t->is_constant_field_extension());
  FieldPtr qi = parse_extension_name("Qi/Q");
  CHECK(qi->degree() == 2);
  CHECK_THROWS_AS(parse_field_name("F6"), ValidationError);
  CHECK_THROWS_AS(parse_extension_name("F8/F3"), ValidationError);
}

TEST_CASE("cli period output matches the documented format") {
  CliOutput r = cli({"cyclic", "period", "--ext", "F9t/F3t", "--a", "t"});
  CHECK(r.code == 0);
  CHECK(r.out == "period=2 (proved: degree certificate)\n");
}

TEST_CASE("cli point counts") {
  CliOutput r = cli({"sb", "points", "--n", "2", "--q", "2", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out == "count=7\n");
}

TEST_CASE("cli circle class line") {
  CliOutput r = cli({"circle", "class", "--k", "F3", "--K", "F9", "--lambda", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "c1=2 class=(F9/F3,2) split=proved\n");
}

TEST_CASE("cli exit codes distinguish unknown verdicts") {
  // 7 is not a sum of two squares; at a tiny bound the answer is Unknown
  CliOutput unknown = cli({"--bound", "2", "cyclic", "split", "--ext", "Qi/Q", "--a", "7"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out.find("split=unknown") != std::string::npos);

  CliOutput refuted = cli({"cyclic", "split", "--ext", "Qi/Q", "--a", "-1"});
  CHECK(refuted.code == 0);
  CHECK(refuted.out.find("split=refuted (sign certificate)") != std::string::npos);

  CliOutput bad = cli({"cyclic", "split", "--ext", "NoSuchField/F3", "--a", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("cli determinism: identical invocations produce identical bytes") {
  std::vector<std::string> args{"cyclic", "index", "--ext", "Qi/Q", "--a", "-1"};
  CliOutput a = cli(args), b = cli(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  CHECK(a.out == "index=(2,2) (proved)\n");
}

TEST_CASE("cli json output reparses") {
  CliOutput r = cli({"--json", "field", "membership", "--ext", "Qi/Q", "--a", "2"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("membership").at("outcome") == "proved");
  FieldPtr qi = FieldDescriptor::gaussian_rationals();
  FieldElement w = element_from_json(qi, j.at("membership").at("witness"));
  CHECK(norm(qi, w) == fe(FieldDescriptor::rationals(), 2));
}

TEST_CASE("cli curve build") {
  CliOutput r = cli({"curve", "build", "--group", "Z4", "--gens", "1,3", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out == "vertices=4 components=8 orbits=2 connected=true\n");
}

TEST_CASE("cli nrd") {
  CliOutput r = cli({"cyclic", "nrd", "--ext", "Qi/Q", "--a", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "nrd=x0^2 + x1^2 + x2^2 + x3^2\n");
}

TEST_CASE("task documents") {
  const char* path = "test_tasks_tmp.json";
  {
    std::ofstream out(path);
    out << R"({
      "fields": {"K": "F9t/F3t", "E": "F9/F3"},
      "classes": {"c": {"ext": "K", "a": {"num": [0, 1]}}},
      "bundles": {"L": {"circle": {"kind": "split", "length": 2, "field": "F9/F3"},
                        "lambda": [[2, 0], 1]}},
      "curves": {"z4": [0,1,2,3, 1,2,3,0, 2,3,0,1, 3,0,1,2]},
      "tasks": [
        {"op": "cyclic.period", "class": "c"},
        {"op": "field.membership", "ext": "Qi/Q", "a": 2},
        {"op": "sb.points", "field": "F2", "n": 2},
        {"op": "circle.class", "bundle": "L"},
        {"op": "curve.build", "curve": "z4", "generators": [1, 3]}
      ]
    })";
  }
  CliOutput r = cli({"run", "--file", path});
  std::remove(path);
  CHECK(r.code == 0);
  CHECK(r.out.find("period=2 (proved: degree certificate)") != std::string::npos);
  CHECK(r.out.find("membership=proved") != std::string::npos);
  CHECK(r.out.find("count=7") != std::string::npos);
  CHECK(r.out.find("c1=2 class=(F9/F3,2) split=proved") != std::string::npos);
  CHECK(r.out.find("vertices=4 components=8 orbits=2") != std::string::npos);
}

TEST_CASE("bundle literal round trips") {
  FieldPtr f9 = FieldDescriptor::finite_extension(F(3), 2);
  SplitLineBundle l = make_split_line_bundle(
      make_split_circle(f9, 2),
      {FieldElement::from_integer(f9, 2), FieldElement::one(f9)});
  SplitLineBundle back = split_bundle_from_json(split_bundle_to_json(l));
  CHECK(back.lambda == l.lambda);
  CHECK(back.circle.field->same_field(*l.circle.field));

  GaloisLineBundle g =
      make_galois_line_bundle(make_galois_circle(f9), FieldElement::generator(f9));
  GaloisLineBundle gback = galois_bundle_from_json(galois_bundle_to_json(g));
  CHECK(gback.lambda1 == g.lambda1);
}

TEST_CASE("cli selftest on a fast suite") {
  CliOutput r = cli({"selftest", "--suite", "curves", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite=curves") != std::string::npos);
  CHECK(r.out.find("failures=0") != std::string::npos);

  CliOutput bad = cli({"selftest", "--suite", "nosuch"});
  CHECK(bad.code == 1);
}
