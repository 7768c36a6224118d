#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl/psl.hpp"

namespace psl::app {

using nlohmann::json;

inline constexpr const char* kWorkspaceVersion = "psl-workspace/1";

struct NamedIdeal {
  std::string owner;  ///< action or algebra the ideal lives in
  Algebra alg;
  std::optional<PartialAction> action;
  Subspace space;
};

enum class ObjectKind { Group, Hopf, Algebra, Action, Ideal, Module };
std::string_view to_string(ObjectKind k);

/// Named objects from a "psl-workspace/1" document. References resolve
/// eagerly on load (UnresolvedReference, ParseError); axioms are not checked
/// here so that `check` can report violations of explicit tensors.
/// The built-in examples (see fixtures()) are always available unless shadowed.
class Workspace {
 public:
  static Workspace builtin();
  static Workspace load(const std::filesystem::path& path);
  static Workspace parse(const json& doc);

  Field field() const noexcept { return field_; }
  std::optional<ObjectKind> kind_of(const std::string& name) const;

  const GroupTable& group(const std::string& name) const;
  const HopfAlgebra& hopf(const std::string& name) const;
  const Algebra& algebra(const std::string& name) const;
  const PartialAction& action(const std::string& name) const;
  const NamedIdeal& ideal(const std::string& name) const;
  const PartialModule& module(const std::string& name) const;

  /// Actions defined in the document (fixtures excluded), in name order.
  std::vector<std::string> document_actions() const;
  /// Every action name, fixtures first.
  std::vector<std::string> action_names() const;

 private:
  struct Raw {
    std::map<std::string, json> groups, hopf, algebras, actions, ideals, modules;
  };

  void resolve_all(const Raw& raw);
  const GroupTable& resolve_group(const Raw& raw, const std::string& name);
  const HopfAlgebra& resolve_hopf(const Raw& raw, const std::string& name);
  const Algebra& resolve_algebra(const Raw& raw, const std::string& name);
  const PartialAction& resolve_action(const Raw& raw, const std::string& name);
  void enter(const std::string& name);
  void leave(const std::string& name);

  Field field_ = Field::rationals();
  std::map<std::string, GroupTable> groups_;
  std::map<std::string, HopfAlgebra> hopf_;
  std::map<std::string, Algebra> algebras_;
  std::map<std::string, PartialAction> actions_;
  std::map<std::string, NamedIdeal> ideals_;
  std::map<std::string, PartialModule> modules_;
  std::set<std::string> document_actions_;
  std::set<std::string> resolving_;
};

/// Scalars travel as strings "num/den" (Q) or integers (F_p).
Scalar parse_scalar(Field f, const json& j);
Vec parse_vec(Field f, const json& j);
json scalar_json(const Scalar& s);
json vec_json(std::span<const Scalar> v);
json subspace_json(const Subspace& s);

}  // namespace psl::app
