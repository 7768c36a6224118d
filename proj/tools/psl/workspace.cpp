#include "workspace.hpp"

#include <fstream>

namespace psl::app {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& req(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) parse_error(ctx + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string req_str(const json& j, const char* key, const std::string& ctx) {
  const json& v = req(j, key, ctx);
  if (!v.is_string()) parse_error(ctx + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t req_size(const json& j, const char* key, const std::string& ctx) {
  const json& v = req(j, key, ctx);
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_error(ctx + ": \"" + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Vec> parse_rows(Field f, const json& j, const std::string& ctx) {
  if (!j.is_array()) parse_error(ctx + ": expected an array of vectors");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(parse_vec(f, r));
  return rows;
}

Matrix parse_matrix(Field f, const json& j, std::size_t rows, std::size_t cols, const std::string& ctx) {
  auto r = parse_rows(f, j, ctx);
  if (r.size() != rows) parse_error(ctx + ": expected " + std::to_string(rows) + " rows");
  for (const auto& v : r)
    if (v.size() != cols) parse_error(ctx + ": expected rows of length " + std::to_string(cols));
  return Matrix::from_rows(f, cols, r);
}

std::map<std::string, json> section(const json& doc, const char* key) {
  std::map<std::string, json> out;
  if (!doc.contains(key)) return out;
  const json& s = doc.at(key);
  if (!s.is_object()) parse_error(std::string("\"") + key + "\" must be an object");
  for (auto it = s.begin(); it != s.end(); ++it) out.emplace(it.key(), it.value());
  return out;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::UnresolvedReference, std::string(what) + " \"" + name + "\"");
  return it->second;
}

}  // namespace

std::string_view to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::Group: return "group";
    case ObjectKind::Hopf: return "hopf";
    case ObjectKind::Algebra: return "algebra";
    case ObjectKind::Action: return "action";
    case ObjectKind::Ideal: return "ideal";
    case ObjectKind::Module: return "module";
  }
  return "object";
}

Scalar parse_scalar(Field f, const json& j) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    parse_error(e.what());
  }
  parse_error("scalar must be an integer or a \"num/den\" string, got " + j.dump());
}

Vec parse_vec(Field f, const json& j) {
  if (!j.is_array()) parse_error("expected a vector, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(parse_scalar(f, x));
  return v;
}

json scalar_json(const Scalar& s) {
  if (s.field().is_finite()) return s.residue_value();
  return s.to_string();
}

json vec_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

json subspace_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(vec_json(v));
  return {{"dim", s.dim()}, {"ambient", s.ambient()}, {"basis", basis}};
}

Workspace Workspace::builtin() {
  Workspace w;
  for (auto& [name, pa] : fixtures()) w.actions_.emplace(name, std::move(pa));
  return w;
}

Workspace Workspace::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open workspace " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return parse(doc);
}

Workspace Workspace::parse(const json& doc) {
  if (!doc.is_object()) parse_error("workspace must be a JSON object");
  if (!doc.contains("version") || doc.at("version") != kWorkspaceVersion)
    parse_error(std::string("workspace \"version\" must be \"") + kWorkspaceVersion + "\"");
  Workspace w = builtin();
  if (doc.contains("field")) {
    if (!doc.at("field").is_string()) parse_error("\"field\" must be a string");
    w.field_ = Field::parse(doc.at("field").get<std::string>());
  }
  Raw raw{section(doc, "groups"),  section(doc, "hopf"),   section(doc, "algebras"),
          section(doc, "actions"), section(doc, "ideals"), section(doc, "modules")};
  try {
    w.resolve_all(raw);
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
  return w;
}

void Workspace::enter(const std::string& name) {
  if (!resolving_.insert(name).second) throw Error(ErrorKind::UnresolvedReference, "cyclic reference at \"" + name + "\"");
}

void Workspace::leave(const std::string& name) { resolving_.erase(name); }

const GroupTable& Workspace::resolve_group(const Raw& raw, const std::string& name) {
  if (auto it = groups_.find(name); it != groups_.end()) return it->second;
  const json& j = lookup(raw.groups, name, "group");
  const std::string ctx = "group " + name;
  enter("group:" + name);
  const std::string type = req_str(j, "type", ctx);
  GroupTable g;
  if (type == "cyclic") {
    g = GroupTable::cyclic(req_size(j, "order", ctx));
  } else if (type == "symmetric3") {
    g = GroupTable::symmetric3();
  } else if (type == "product") {
    const json& f = req(j, "factors", ctx);
    if (!f.is_array() || f.size() != 2) parse_error(ctx + ": \"factors\" must name two groups");
    g = GroupTable::direct_product(resolve_group(raw, f[0].get<std::string>()), resolve_group(raw, f[1].get<std::string>()));
  } else if (type == "cayley") {
    auto table = req(j, "table", ctx).get<std::vector<std::vector<std::size_t>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    g = GroupTable::from_cayley(std::move(table), std::move(names));
  } else {
    parse_error(ctx + ": unknown type \"" + type + "\"");
  }
  leave("group:" + name);
  return groups_.emplace(name, std::move(g)).first->second;
}

const HopfAlgebra& Workspace::resolve_hopf(const Raw& raw, const std::string& name) {
  if (auto it = hopf_.find(name); it != hopf_.end()) return it->second;
  const json& j = lookup(raw.hopf, name, "hopf algebra");
  const std::string ctx = "hopf " + name;
  enter("hopf:" + name);
  const std::string type = req_str(j, "type", ctx);
  HopfAlgebra h;
  if (type == "group_algebra") {
    h = group_algebra(field_, resolve_group(raw, req_str(j, "group", ctx)));
  } else if (type == "dual_group_algebra") {
    h = dual_group_algebra(field_, resolve_group(raw, req_str(j, "group", ctx)));
  } else if (type == "dual") {
    h = dual_hopf(resolve_hopf(raw, req_str(j, "of", ctx)));
  } else if (type == "sweedler") {
    h = sweedler_h4(field_);
  } else if (type == "explicit") {
    const Algebra& a = resolve_algebra(raw, req_str(j, "algebra", ctx));
    const std::size_t m = a.dim();
    const json& cj = req(j, "comul", ctx);
    if (!cj.is_array() || cj.size() != m) parse_error(ctx + ": \"comul\" needs one m x m block per basis element");
    std::vector<Vec> comul;
    for (const auto& block : cj) {
      Matrix b = parse_matrix(field_, block, m, m, ctx + " comul");
      Vec flat;
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) flat.push_back(b(p, q));
      comul.push_back(std::move(flat));
    }
    Vec counit = parse_vec(field_, req(j, "counit", ctx));
    Matrix s = parse_matrix(field_, req(j, "antipode", ctx), m, m, ctx + " antipode").transpose();
    h = HopfAlgebra(a, std::move(comul), std::move(counit), std::move(s));
  } else {
    parse_error(ctx + ": unknown type \"" + type + "\"");
  }
  leave("hopf:" + name);
  return hopf_.emplace(name, std::move(h)).first->second;
}

const Algebra& Workspace::resolve_algebra(const Raw& raw, const std::string& name) {
  if (auto it = algebras_.find(name); it != algebras_.end()) return it->second;
  const json& j = lookup(raw.algebras, name, "algebra");
  const std::string ctx = "algebra " + name;
  enter("algebra:" + name);
  const std::string type = req_str(j, "type", ctx);
  Algebra a;
  if (type == "base_field") {
    a = base_field_algebra(field_);
  } else if (type == "product_of_fields") {
    a = product_of_fields(field_, req_size(j, "n", ctx));
  } else if (type == "truncated_polynomial") {
    a = truncated_polynomial(field_, req_size(j, "n", ctx));
  } else if (type == "upper_triangular") {
    a = upper_triangular(field_, req_size(j, "n", ctx));
  } else if (type == "matrix") {
    a = matrix_algebra(field_, req_size(j, "n", ctx));
  } else if (type == "hopf") {
    a = resolve_hopf(raw, req_str(j, "of", ctx)).alg();
  } else if (type == "product") {
    const json& f = req(j, "factors", ctx);
    if (!f.is_array() || f.empty()) parse_error(ctx + ": \"factors\" must be a nonempty list");
    a = resolve_algebra(raw, f[0].get<std::string>());
    for (std::size_t i = 1; i < f.size(); ++i) a = direct_product(a, resolve_algebra(raw, f[i].get<std::string>()));
  } else if (type == "tensor") {
    const json& f = req(j, "factors", ctx);
    if (!f.is_array() || f.size() != 2) parse_error(ctx + ": \"factors\" must name two algebras");
    a = tensor_product(resolve_algebra(raw, f[0].get<std::string>()), resolve_algebra(raw, f[1].get<std::string>()));
  } else if (type == "explicit") {
    const json& mj = req(j, "mult", ctx);
    if (!mj.is_array()) parse_error(ctx + ": \"mult\" must be an n x n x n array");
    const std::size_t n = mj.size();
    std::vector<Vec> table;
    for (const auto& row : mj) {
      auto r = parse_rows(field_, row, ctx + " mult");
      if (r.size() != n) parse_error(ctx + ": \"mult\" must be n x n x n");
      for (auto& v : r) {
        if (v.size() != n) parse_error(ctx + ": \"mult\" must be n x n x n");
        table.push_back(std::move(v));
      }
    }
    std::optional<Vec> unit;
    if (j.contains("unit")) unit = parse_vec(field_, j.at("unit"));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    a = Algebra(field_, n, std::move(table), std::move(unit), std::move(labels));
  } else {
    parse_error(ctx + ": unknown type \"" + type + "\"");
  }
  leave("algebra:" + name);
  return algebras_.emplace(name, std::move(a)).first->second;
}

const PartialAction& Workspace::resolve_action(const Raw& raw, const std::string& name) {
  if (!raw.actions.contains(name)) return lookup(actions_, name, "action");
  if (auto it = actions_.find(name); it != actions_.end() && document_actions_.contains(name)) return it->second;
  const json& j = raw.actions.at(name);
  const std::string ctx = "action " + name;
  enter("action:" + name);
  const std::string type = req_str(j, "type", ctx);
  PartialAction pa;
  if (type == "c4_triple") {
    pa = c4_triple(field_);
  } else if (type == "trivial") {
    pa = trivial_action(resolve_hopf(raw, req_str(j, "hopf", ctx)), resolve_algebra(raw, req_str(j, "algebra", ctx)));
  } else if (type == "dual_group_idempotent") {
    pa = dual_group_idempotent(field_, resolve_group(raw, req_str(j, "group", ctx)),
                               req(j, "subgroup", ctx).get<std::vector<std::size_t>>());
  } else if (type == "dual_group_regular") {
    pa = dual_group_regular_action(field_, resolve_group(raw, req_str(j, "group", ctx)));
  } else if (type == "induce") {
    const PartialAction& g = resolve_action(raw, req_str(j, "global", ctx));
    pa = induce_from_ideal(g, parse_vec(g.field(), req(j, "idempotent", ctx)));
  } else if (type == "quotient") {
    const PartialAction& base = resolve_action(raw, req_str(j, "action", ctx));
    auto rows = parse_rows(base.field(), req(j, "ideal", ctx), ctx + " ideal");
    pa = quotient_action(base, Subspace::span(base.field(), base.adim(), rows)).action;
  } else if (type == "explicit") {
    const HopfAlgebra& h = resolve_hopf(raw, req_str(j, "hopf", ctx));
    const Algebra& a = resolve_algebra(raw, req_str(j, "algebra", ctx));
    const json& aj = req(j, "act", ctx);
    if (!aj.is_array() || aj.size() != h.dim()) parse_error(ctx + ": \"act\" needs dim(H) rows");
    std::vector<Vec> act;
    for (const auto& row : aj) {
      auto r = parse_rows(field_, row, ctx + " act");
      if (r.size() != a.dim()) parse_error(ctx + ": each \"act\" row needs dim(A) vectors");
      for (auto& v : r) act.push_back(std::move(v));
    }
    pa = PartialAction(h, a, std::move(act));
  } else {
    parse_error(ctx + ": unknown type \"" + type + "\"");
  }
  leave("action:" + name);
  document_actions_.insert(name);
  return actions_.insert_or_assign(name, std::move(pa)).first->second;
}

void Workspace::resolve_all(const Raw& raw) {
  for (const auto& [name, j] : raw.groups) resolve_group(raw, name);
  for (const auto& [name, j] : raw.algebras) resolve_algebra(raw, name);
  for (const auto& [name, j] : raw.hopf) resolve_hopf(raw, name);
  for (const auto& [name, j] : raw.actions) resolve_action(raw, name);
  for (const auto& [name, j] : raw.ideals) {
    const std::string ctx = "ideal " + name;
    NamedIdeal ideal;
    if (j.contains("action")) {
      ideal.owner = req_str(j, "action", ctx);
      ideal.action = resolve_action(raw, ideal.owner);
      ideal.alg = ideal.action->alg();
    } else {
      ideal.owner = req_str(j, "algebra", ctx);
      ideal.alg = resolve_algebra(raw, ideal.owner);
    }
    auto rows = parse_rows(ideal.alg.field(), req(j, "basis", ctx), ctx);
    for (const auto& r : rows)
      if (r.size() != ideal.alg.dim()) parse_error(ctx + ": basis vectors need length dim(A)");
    ideal.space = Subspace::span(ideal.alg.field(), ideal.alg.dim(), rows);
    ideals_.emplace(name, std::move(ideal));
  }
  for (const auto& [name, j] : raw.modules) {
    const std::string ctx = "module " + name;
    const PartialAction& pa = resolve_action(raw, req_str(j, "action", ctx));
    const std::string side_s = j.contains("side") ? j.at("side").get<std::string>() : "right";
    if (side_s != "left" && side_s != "right") parse_error(ctx + ": \"side\" must be \"left\" or \"right\"");
    const Side side = side_s == "left" ? Side::Left : Side::Right;
    const std::string type = j.contains("type") ? j.at("type").get<std::string>() : "explicit";
    PartialModule m;
    if (type == "left_regular") {
      m = left_regular_partial_module(pa);
    } else if (type == "smash_regular") {
      SmashProduct sp = build_partial_smash(pa);
      m = from_smash_module(sp, regular_module(sp.carrier, side));
    } else if (type == "explicit") {
      const std::size_t d = req_size(j, "dim", ctx);
      m = PartialModule{side, pa, d, {}, {}};
      const json& aj = req(j, "a_ops", ctx);
      const json& hj = req(j, "h_ops", ctx);
      if (!aj.is_array() || aj.size() != pa.adim()) parse_error(ctx + ": \"a_ops\" needs dim(A) matrices");
      if (!hj.is_array() || hj.size() != pa.hdim()) parse_error(ctx + ": \"h_ops\" needs dim(H) matrices");
      for (const auto& op : aj) m.a_ops.push_back(parse_matrix(pa.field(), op, d, d, ctx + " a_ops"));
      for (const auto& op : hj) m.h_ops.push_back(parse_matrix(pa.field(), op, d, d, ctx + " h_ops"));
    } else {
      parse_error(ctx + ": unknown type \"" + type + "\"");
    }
    modules_.emplace(name, std::move(m));
  }
}

std::optional<ObjectKind> Workspace::kind_of(const std::string& name) const {
  if (modules_.contains(name)) return ObjectKind::Module;
  if (ideals_.contains(name)) return ObjectKind::Ideal;
  if (actions_.contains(name)) return ObjectKind::Action;
  if (hopf_.contains(name)) return ObjectKind::Hopf;
  if (algebras_.contains(name)) return ObjectKind::Algebra;
  if (groups_.contains(name)) return ObjectKind::Group;
  return std::nullopt;
}

const GroupTable& Workspace::group(const std::string& name) const { return lookup(groups_, name, "group"); }
const HopfAlgebra& Workspace::hopf(const std::string& name) const { return lookup(hopf_, name, "hopf algebra"); }
const Algebra& Workspace::algebra(const std::string& name) const { return lookup(algebras_, name, "algebra"); }
const PartialAction& Workspace::action(const std::string& name) const { return lookup(actions_, name, "action"); }
const NamedIdeal& Workspace::ideal(const std::string& name) const { return lookup(ideals_, name, "ideal"); }
const PartialModule& Workspace::module(const std::string& name) const { return lookup(modules_, name, "module"); }

std::vector<std::string> Workspace::document_actions() const {
  return {document_actions_.begin(), document_actions_.end()};
}

std::vector<std::string> Workspace::action_names() const {
  std::vector<std::string> out;
  for (const auto& [name, pa] : actions_)
    if (!document_actions_.contains(name)) out.push_back(name);
  for (const auto& name : document_actions_) out.push_back(name);
  return out;
}

}  // namespace psl::app
