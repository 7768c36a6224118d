#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace psl {

struct Violation {
  std::string axiom;                  ///< short axiom tag, e.g. "assoc", "PA3"
  std::vector<std::size_t> witness;   ///< basis indices of the offending tuple
  std::string detail;
};

/// Outcome of an axiom checker. Checkers never throw on a failed axiom; they
/// record every violated basis tuple here.
struct CheckReport {
  std::string subject;
  std::vector<Violation> violations;
  std::size_t checks = 0;

  bool passed() const noexcept { return violations.empty(); }
  void fail(std::string axiom, std::vector<std::size_t> witness, std::string detail = {});
  /// Appends another report's violations, prefixing their axiom tags.
  void merge(const CheckReport& other, const std::string& prefix = {});
  std::string to_text() const;
};

}  // namespace psl
