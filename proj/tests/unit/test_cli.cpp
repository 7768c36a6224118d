#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using namespace psl;
using namespace psl::app;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "psl");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_workspace(const std::string& name, const json& doc) {
  auto path = std::filesystem::temp_directory_path() / ("psl_test_" + name + ".json");
  std::ofstream(path) << doc.dump(2);
  return path.string();
}

json base_doc(const std::string& field) {
  return {{"version", kWorkspaceVersion}, {"field", field}};
}

}  // namespace

TEST_CASE("check") {
  Run ok = run({"check", "c4-triple"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("pass") != std::string::npos);

  Run missing = run({"check", "no-such-object"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("UnresolvedReference") != std::string::npos);

  // c4 triple with g . e_1 changed to e_1.
  json doc = base_doc("Q");
  doc["groups"]["c4"] = {{"type", "cyclic"}, {"order", 4}};
  doc["hopf"]["h"] = {{"type", "group_algebra"}, {"group", "c4"}};
  doc["algebras"]["a"] = {{"type", "product_of_fields"}, {"n", 3}};
  json act = json::array();
  const int table[4][3] = {{1, 2, 3}, {1, 1, 2}, {3, 0, 1}, {2, 3, 0}};
  for (const auto& row : table) {
    json r = json::array();
    for (int y : row) {
      json v = json::array({0, 0, 0});
      if (y) v[y - 1] = 1;
      r.push_back(v);
    }
    act.push_back(r);
  }
  doc["actions"]["broken"] = {{"type", "explicit"}, {"hopf", "h"}, {"algebra", "a"}, {"act", act}};
  std::string path = write_workspace("broken", doc);
  Run bad = run({"--workspace", path, "--output", "json", "check", "broken"});
  CHECK(bad.code == 1);
  json rep = json::parse(bad.out);
  CHECK(rep["report"]["passed"] == false);
  bool pa4 = false;
  for (const auto& v : rep["report"]["violations"])
    if (v["axiom"] == "PA4" && v["witness"] == json::array({1, 3, 0})) pa4 = true;
  CHECK(pa4);

  doc["actions"]["good"] = {{"type", "c4_triple"}};
  path = write_workspace("good", doc);
  CHECK(run({"--workspace", path, "check", "good"}).code == 0);
  CHECK(run({"--workspace", path, "check", "a"}).code == 0);
  CHECK(run({"--workspace", path, "check", "h"}).code == 0);
}

TEST_CASE("smash") {
  CHECK(run({"smash", "dual-c2"}).out.find("full 2, partial 1") != std::string::npos);
  CHECK(run({"smash", "c4-triple"}).out.find("full 12, partial 9") != std::string::npos);

  json doc = base_doc("Q");
  doc["groups"]["c2"] = {{"type", "cyclic"}, {"order", 2}};
  doc["hopf"]["h"] = {{"type", "group_algebra"}, {"group", "c2"}};
  doc["algebras"]["k"] = {{"type", "base_field"}};
  doc["actions"]["t"] = {{"type", "trivial"}, {"hopf", "h"}, {"algebra", "k"}};
  std::string path = write_workspace("smash", doc);
  Run r = run({"--workspace", path, "smash", "t"});
  CHECK(r.code == 0);
  CHECK(r.out.find("full 2, partial 2") != std::string::npos);

  Run j = run({"--output", "json", "smash", "c4-triple"});
  json rep = json::parse(j.out);
  CHECK(rep["full_dim"] == 12);
  CHECK(rep["partial_dim"] == 9);
  CHECK(rep["dual_action_global"] == true);
}

TEST_CASE("radicals") {
  json b = json::parse(run({"--output", "json", "radicals", "c4-triple"}).out);
  for (const char* key : {"J(A)", "P(A)", "J_H(A)", "P_H(A)", "J(A#H)", "P(A#H)"}) CHECK(b[key]["dim"] == 0);

  json d = json::parse(run({"--output", "json", "radicals", "trivial-f2c2"}).out);
  CHECK(d["J(A)"]["dim"] == 0);
  CHECK(d["J(A#H)"]["dim"] == 1);
  CHECK(d["J(A#H)"]["basis"] == json::array({json::array({1, 1})}));

  json doc = base_doc("F2");
  doc["groups"]["c2"] = {{"type", "cyclic"}, {"order", 2}};
  doc["hopf"]["h"] = {{"type", "group_algebra"}, {"group", "c2"}};
  doc["algebras"]["a"] = {{"type", "hopf"}, {"of", "h"}};
  doc["actions"]["t"] = {{"type", "trivial"}, {"hopf", "h"}, {"algebra", "a"}};
  std::string path = write_workspace("radicals", doc);
  json t = json::parse(run({"--workspace", path, "--output", "json", "radicals", "t"}).out);
  CHECK(t["J(A)"]["dim"] == 1);
  CHECK(t["J_H(A)"]["basis"] == t["J(A)"]["basis"]);
  CHECK(t["J_H(A)"]["dim"] == 1);

  // Outside the caps the command reports an unsupported input.
  json big = base_doc("F7");
  big["groups"]["c7"] = {{"type", "cyclic"}, {"order", 7}};
  big["hopf"]["h"] = {{"type", "group_algebra"}, {"group", "c7"}};
  big["algebras"]["a"] = {{"type", "hopf"}, {"of", "h"}};
  big["actions"]["t"] = {{"type", "trivial"}, {"hopf", "h"}, {"algebra", "a"}};
  path = write_workspace("big", big);
  Run r = run({"--workspace", path, "radicals", "t"});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnsupportedCharacteristic") != std::string::npos);
}

TEST_CASE("verify") {
  for (const char* id : {"T4.26", "T5.1", "NEG-SS", "T3.6"}) {
    Run r = run({"--trials", "4", "verify", id});
    INFO(id << "\n" << r.out);
    CHECK(r.code == 0);
  }
  json rep = json::parse(run({"--trials", "2", "--output", "json", "verify", "T5.1"}).out);
  bool c4_pass = false;
  for (const auto& c : rep["suites"][0]["cases"])
    if (c["instance"] == "c4-triple" && c["status"] == "pass") c4_pass = true;
  CHECK(c4_pass);

  Run a = run({"--seed", "7", "--trials", "3", "--output", "json", "verify", "C5.7"});
  Run b = run({"--seed", "7", "--trials", "3", "--output", "json", "verify", "C5.7"});
  CHECK(a.out == b.out);
  CHECK(run({"verify", "T9.99"}).code == 2);
  for (const auto& s : suites()) CHECK(find_suite(s.id).has_value());
  CHECK(suites().size() == 13);
}

TEST_CASE("enumerate-ideals") {
  json doc = base_doc("F2");
  doc["groups"]["c2"] = {{"type", "cyclic"}, {"order", 2}};
  doc["hopf"]["h"] = {{"type", "group_algebra"}, {"group", "c2"}};
  doc["algebras"]["a"] = {{"type", "product_of_fields"}, {"n", 2}};
  doc["actions"]["t"] = {{"type", "trivial"}, {"hopf", "h"}, {"algebra", "a"}};
  std::string path = write_workspace("enum", doc);
  Run r = run({"--workspace", path, "--output", "json", "enumerate-ideals", "t"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["ideals"].size() == 4);
  Run alg = run({"--workspace", path, "--output", "json", "enumerate-ideals", "a"});
  CHECK(alg.code == 0);
  CHECK(json::parse(alg.out)["ideals"].size() == 4);
  CHECK(run({"enumerate-ideals", "c4-triple"}).code == 2);
}

TEST_CASE("workspace parsing") {
  json doc = base_doc("Q");
  doc["groups"]["c2"] = {{"type", "cyclic"}, {"order", 2}};
  doc["groups"]["s3"] = {{"type", "symmetric3"}};
  doc["groups"]["k4"] = {{"type", "product"}, {"factors", {"c2", "c2"}}};
  doc["hopf"]["dual"] = {{"type", "dual_group_algebra"}, {"group", "c2"}};
  doc["hopf"]["kg"] = {{"type", "group_algebra"}, {"group", "c2"}};
  doc["actions"]["reg"] = {{"type", "dual_group_regular"}, {"group", "c2"}};
  doc["actions"]["ind"] = {{"type", "induce"}, {"global", "reg"}, {"idempotent", {"1/2", "1/2"}}};
  doc["actions"]["en"] = {{"type", "dual_group_idempotent"}, {"group", "s3"}, {"subgroup", {0, 3, 4}}};
  doc["ideals"]["zero"] = {{"action", "ind"}, {"basis", json::array()}};
  doc["modules"]["lr"] = {{"action", "ind"}, {"side", "left"}, {"type", "left_regular"}};
  doc["modules"]["sr"] = {{"action", "reg"}, {"type", "smash_regular"}};
  Workspace ws = Workspace::parse(doc);
  CHECK(ws.field() == Field::rationals());
  CHECK(ws.group("k4").order() == 4);
  CHECK(ws.kind_of("ind") == ObjectKind::Action);
  CHECK(ws.kind_of("lr") == ObjectKind::Module);
  CHECK(ws.kind_of("nothing") == std::nullopt);
  const PartialAction& ind = ws.action("ind");
  CHECK(ind.adim() == 1);
  CHECK(ind.act_basis(0, 0) == Vec{Field::rationals().from_fraction(1, 2)});
  CHECK(ws.action("en").adim() == 2);
  CHECK(ws.document_actions() == std::vector<std::string>{"en", "ind", "reg"});
  CHECK(check_partial_module(ws.module("sr")).passed());
  CHECK(ws.ideal("zero").space.is_zero());
  CHECK(ws.action("c4-triple").adim() == 3);

  Field q = Field::rationals();
  CHECK(parse_scalar(q, "-3/6") == q.from_fraction(-1, 2));
  CHECK(parse_scalar(q, 4) == q.from_int(4));
  CHECK(parse_scalar(Field::prime(5), 7) == Field::prime(5).from_int(2));
  CHECK(scalar_json(q.from_fraction(2, 3)) == "2/3");
  CHECK(parse_vec(q, vec_json(Vec{q.from_fraction(-5, 7), q.one()})) == Vec{q.from_fraction(-5, 7), q.one()});

  auto kind = [](const json& d) {
    try {
      Workspace::parse(d);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind(json{{"version", "psl-workspace/0"}}) == ErrorKind::ParseError);
  json cyc = base_doc("Q");
  cyc["hopf"]["a"] = {{"type", "dual"}, {"of", "b"}};
  cyc["hopf"]["b"] = {{"type", "dual"}, {"of", "a"}};
  CHECK(kind(cyc) == ErrorKind::UnresolvedReference);
  json dangling = base_doc("Q");
  dangling["actions"]["x"] = {{"type", "trivial"}, {"hopf", "nope"}, {"algebra", "nope"}};
  CHECK(kind(dangling) == ErrorKind::UnresolvedReference);
  json unknown = base_doc("Q");
  unknown["algebras"]["x"] = {{"type", "octonions"}};
  CHECK(kind(unknown) == ErrorKind::ParseError);
  CHECK(kind(base_doc("F4")) == ErrorKind::InvalidField);
  json frac = base_doc("F5");
  frac["algebras"]["k"] = {{"type", "base_field"}};
  frac["algebras"]["x"] = {{"type", "explicit"}, {"mult", {{{"1/5"}}}}};
  CHECK(kind(frac) == ErrorKind::ParseError);
  CHECK(parse_scalar(Field::prime(5), "1/2") == Field::prime(5).from_int(3));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"--output", "xml", "check", "c4-triple"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto path = std::filesystem::temp_directory_path() / "psl_test_malformed.json";
  std::ofstream(path) << "{ not json";
  CHECK(run({"--workspace", path.string(), "check", "x"}).code == 2);
  CHECK(run({"--workspace", "/nonexistent/psl.json", "check", "x"}).code == 2);

  CHECK(exit_code_for(ErrorKind::ParseError) == 2);
  CHECK(exit_code_for(ErrorKind::UnresolvedReference) == 2);
  CHECK(exit_code_for(ErrorKind::AxiomViolation) == 1);
  CHECK(exit_code_for(ErrorKind::NotHStable) == 1);
}
