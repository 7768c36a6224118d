#include "psl/report.hpp"

#include <sstream>

namespace psl {

void CheckReport::fail(std::string axiom, std::vector<std::size_t> witness, std::string detail) {
  violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  checks += other.checks;
  for (const auto& v : other.violations) violations.push_back({prefix + v.axiom, v.witness, v.detail});
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << subject << ": " << (passed() ? "pass" : "FAIL") << " (" << checks << " checks";
  if (!passed()) os << ", " << violations.size() << " violations";
  os << ")\n";
  constexpr std::size_t shown = 20;
  for (std::size_t i = 0; i < violations.size() && i < shown; ++i) {
    const auto& v = violations[i];
    os << "  " << v.axiom << " at (";
    for (std::size_t k = 0; k < v.witness.size(); ++k) os << (k ? "," : "") << v.witness[k];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  if (violations.size() > shown) os << "  ... " << violations.size() - shown << " more\n";
  return os.str();
}

}  // namespace psl
