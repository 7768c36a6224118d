#include "commands.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace psl::app {

namespace {

json report_json(const CheckReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}, {"detail", x.detail}});
  return {{"subject", r.subject}, {"passed", r.passed()}, {"checks", r.checks}, {"violations", v}};
}

Outcome from_report(const std::string& name, std::string_view kind, const CheckReport& r) {
  Outcome o;
  o.exit_code = r.passed() ? 0 : 1;
  o.report = {{"command", "check"}, {"name", name}, {"kind", kind}, {"report", report_json(r)}};
  o.text = name + " (" + std::string(kind) + "): " + r.to_text();
  return o;
}

std::string basis_text(const Subspace& s) {
  std::ostringstream out;
  for (const auto& v : s.basis_vectors()) out << "    " << to_string(v) << "\n";
  return out.str();
}


}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnresolvedReference:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidField:
    case ErrorKind::UnsupportedCharacteristic:
    case ErrorKind::DimensionTooLarge:
    case ErrorKind::FieldNotFinite:
      return 2;
    default:
      return 1;
  }
}

Outcome cmd_check(const Workspace& ws, const std::string& name, const CommandOptions& opts) {
  auto kind = ws.kind_of(name);
  if (!kind) throw Error(ErrorKind::UnresolvedReference, "\"" + name + "\"");
  CheckReport r;
  switch (*kind) {
    case ObjectKind::Group:
      r.subject = "group of order " + std::to_string(ws.group(name).order());
      r.checks = 1;
      break;
    case ObjectKind::Algebra: r = check_algebra(ws.algebra(name)); break;
    case ObjectKind::Hopf: r = check_hopf(ws.hopf(name)); break;
    case ObjectKind::Action: {
      const PartialAction& pa = ws.action(name);
      r = check_partial_action(pa, 16, opts.seed);
      if (r.passed()) r.merge(check_partial_coaction(action_to_coaction(pa)), "coaction/");
      break;
    }
    case ObjectKind::Ideal: {
      const NamedIdeal& i = ws.ideal(name);
      r.subject = "ideal of dim " + std::to_string(i.space.dim()) + " in " + i.owner;
      ++r.checks;
      if (!is_ideal(i.alg, i.space)) r.fail("ideal", {});
      if (i.action) {
        ++r.checks;
        if (!is_h_stable(*i.action, i.space)) r.fail("H-stable", {});
      }
      break;
    }
    case ObjectKind::Module: {
      const PartialModule& m = ws.module(name);
      r = check_partial_module(m);
      if (r.passed()) {
        ++r.checks;
        if (!is_h_stable(m.pa, annihilator(m))) r.fail("ann H-stable", {});
      }
      break;
    }
  }
  return from_report(name, to_string(*kind), r);
}

Outcome cmd_smash(const Workspace& ws, const std::string& name, const CommandOptions&) {
  const PartialAction& pa = ws.action(name);
  SmashProduct sp = build_partial_smash(pa);
  CheckReport carrier = check_algebra(sp.carrier);
  CheckReport dual = check_partial_action(sp.dual_action);
  const bool dual_global = is_global(sp.dual_action);
  Outcome o;
  o.exit_code = carrier.passed() && dual.passed() && dual_global ? 0 : 1;
  json basis = json::array();
  for (const auto& v : sp.image.basis_vectors()) basis.push_back(vec_json(v));
  o.report = {{"command", "smash"},
              {"action", name},
              {"field", pa.field().name()},
              {"full_dim", sp.full_dim()},
              {"partial_dim", sp.dim()},
              {"labels", sp.carrier.labels()},
              {"basis", basis},
              {"unit", vec_json(sp.unit_element)},
              {"carrier_check", report_json(carrier)},
              {"dual_action_check", report_json(dual)},
              {"dual_action_global", dual_global}};
  std::ostringstream t;
  t << "full " << sp.full_dim() << ", partial " << sp.dim() << "\n";
  t << "basis:";
  for (const auto& l : sp.carrier.labels()) t << " " << l;
  t << "\nunit: " << to_string(sp.unit_element) << "\n";
  t << "carrier axioms: " << (carrier.passed() ? "pass" : "FAIL") << "\n";
  t << "dual action: " << (dual.passed() ? "pass" : "FAIL") << (dual_global ? ", global" : ", not global") << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_radicals(const Workspace& ws, const std::string& name, const CommandOptions& opts) {
  const PartialAction& pa = ws.action(name);
  SmashProduct sp = build_partial_smash(pa);
  RadicalReport ja = jacobson_radical(pa.alg(), opts.caps);
  RadicalReport js = jacobson_radical(sp.carrier, opts.caps);
  struct Row {
    const char* key;
    Subspace space;
    std::string method;
  };
  const std::vector<Row> rows{
      {"J(A)", ja.radical, std::string(to_string(ja.method))},
      {"P(A)", prime_radical(pa.alg(), opts.caps), "equals J(A)"},
      {"J_H(A)", h_jacobson_radical(pa, opts.caps), "(J(A):H)"},
      {"P_H(A)", h_prime_radical(pa, opts.caps), "(P(A):H)"},
      {"J(A#H)", js.radical, std::string(to_string(js.method))},
      {"P(A#H)", prime_radical(sp.carrier, opts.caps), "equals J(A#H)"},
  };
  Outcome o;
  o.report = {{"command", "radicals"}, {"action", name}, {"field", pa.field().name()}};
  std::ostringstream t;
  for (const auto& r : rows) {
    json j = subspace_json(r.space);
    j["method"] = r.method;
    o.report[r.key] = j;
    t << r.key << ": dim " << r.space.dim() << " (" << r.method << ")\n" << basis_text(r.space);
  }
  o.text = t.str();
  return o;
}

Outcome cmd_verify(const Workspace& ws, bool use_workspace_actions, const std::string& id, const CommandOptions& opts) {
  std::vector<std::string> ids;
  if (id == "all") {
    for (const auto& s : suites()) ids.push_back(s.id);
  } else {
    if (!find_suite(id)) throw Error(ErrorKind::UnresolvedReference, "unknown theorem id \"" + id + "\"");
    ids.push_back(id);
  }
  std::vector<NamedAction> extra;
  if (use_workspace_actions)
    for (const auto& n : ws.document_actions()) extra.push_back({n, ws.action(n)});
  SuiteOptions so{opts.seed, opts.trials, opts.caps};
  Outcome o;
  o.report = {{"command", "verify"}, {"seed", opts.seed}, {"trials", opts.trials}, {"suites", json::array()}};
  std::ostringstream t;
  bool all_pass = true;
  for (const auto& sid : ids) {
    SuiteResult r = run_suite(sid, extra, so);
    all_pass = all_pass && r.passed();
    json cases = json::array();
    t << sid << ": " << r.statement << "\n";
    for (const auto& c : r.cases) {
      const char* tag = c.status == CaseResult::Status::Pass ? "pass" : c.status == CaseResult::Status::Fail ? "fail" : "skip";
      cases.push_back({{"instance", c.instance}, {"status", tag}, {"detail", c.detail}});
      if (c.status != CaseResult::Status::Skip || !c.detail.empty())
        t << "  " << tag << "  " << c.instance << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    const auto np = r.count(CaseResult::Status::Pass), nf = r.count(CaseResult::Status::Fail),
               ns = r.count(CaseResult::Status::Skip);
    t << "  => " << (r.passed() ? "PASS" : "FAIL") << " (" << np << " passed, " << nf << " failed, " << ns
      << " skipped)\n";
    o.report["suites"].push_back({{"id", sid},
                                  {"statement", r.statement},
                                  {"passed", r.passed()},
                                  {"counts", {{"pass", np}, {"fail", nf}, {"skip", ns}}},
                                  {"cases", cases}});
  }
  o.exit_code = all_pass ? 0 : 1;
  o.report["passed"] = all_pass;
  o.text = t.str();
  return o;
}

Outcome cmd_enumerate_ideals(const Workspace& ws, const std::string& name, const CommandOptions& opts) {
  auto kind = ws.kind_of(name);
  if (!kind) throw Error(ErrorKind::UnresolvedReference, "\"" + name + "\"");
  Outcome o;
  std::ostringstream t;
  json list = json::array();
  if (*kind == ObjectKind::Action) {
    const PartialAction& pa = ws.action(name);
    auto ideals = enumerate_h_stable_ideals(pa, opts.caps);
    t << ideals.size() << " H-stable ideals of " << name << "\n";
    for (const auto& i : ideals) {
      const bool prime = !i.is_full() && is_h_prime(pa, i, opts.caps);
      json j = subspace_json(i);
      j["h_prime"] = prime;
      list.push_back(j);
      t << "  dim " << i.dim() << (prime ? "  H-prime" : "") << "\n" << basis_text(i);
    }
  } else if (*kind == ObjectKind::Algebra) {
    const Algebra& a = ws.algebra(name);
    auto ideals = enumerate_h_stable_ideals(trivial_action(group_algebra(a.field(), GroupTable::cyclic(1)), a), opts.caps);
    t << ideals.size() << " two-sided ideals of " << name << "\n";
    for (const auto& i : ideals) {
      list.push_back(subspace_json(i));
      t << "  dim " << i.dim() << "\n" << basis_text(i);
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "enumerate-ideals expects an action or an algebra, got a " +
                                                std::string(to_string(*kind)));
  }
  o.report = {{"command", "enumerate-ideals"}, {"name", name}, {"ideals", list}};
  o.text = t.str();
  return o;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with partial Hopf actions, smash products and radicals"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string workspace_path, output = "text";
  CommandOptions opts;
  app.add_option("--workspace", workspace_path, "workspace file (psl-workspace/1)");
  app.add_option("--seed", opts.seed, "random seed for verification instances");
  app.add_option("--trials", opts.trials, "number of random instances per suite");
  app.add_option("--dim-cap", opts.caps.dim_cap, "largest dimension for exhaustive searches");
  app.add_option("--field-cap", opts.caps.field_cap, "largest field size for exhaustive searches");
  app.add_option("--output", output, "report format")->check(CLI::IsMember({"json", "text"}));

  std::string name, id;
  auto* check = app.add_subcommand("check", "check the axioms of a named object");
  check->add_option("name", name, "object name")->required();
  auto* smash = app.add_subcommand("smash", "build the partial smash product of an action");
  smash->add_option("action", name, "action name")->required();
  auto* radicals = app.add_subcommand("radicals", "J, P, J_H, P_H and the smash radicals");
  radicals->add_option("action", name, "action name")->required();
  auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
  verify->add_option("theorem", id, "theorem id or \"all\"")->required();
  auto* enumerate = app.add_subcommand("enumerate-ideals", "list the H-stable ideals (finite fields)");
  enumerate->add_option("name", name, "action or algebra name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Workspace ws = workspace_path.empty() ? Workspace::builtin() : Workspace::load(workspace_path);
    Outcome o;
    if (check->parsed()) o = cmd_check(ws, name, opts);
    else if (smash->parsed()) o = cmd_smash(ws, name, opts);
    else if (radicals->parsed()) o = cmd_radicals(ws, name, opts);
    else if (verify->parsed()) o = cmd_verify(ws, !workspace_path.empty(), id, opts);
    else o = cmd_enumerate_ideals(ws, name, opts);
    o.report["exit_code"] = o.exit_code;
    if (output == "json") out << o.report.dump(2) << "\n";
    else out << o.text;
    return o.exit_code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (output == "json") {
      out << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"exit_code", code}}.dump(2) << "\n";
    } else {
      err << "psl: " << e.what() << "\n";
      if (e.kind() == ErrorKind::UnsupportedCharacteristic || e.kind() == ErrorKind::DimensionTooLarge)
        err << "psl: raise --dim-cap / --field-cap to allow a larger exhaustive search\n";
    }
    return code;
  }
}

}  // namespace psl::app
