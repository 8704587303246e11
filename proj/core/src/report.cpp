#include "schemelab/report.hpp"

#include <algorithm>
#include <sstream>

namespace schemelab {

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    for (const auto& line : header) os << "   " << line << "\n";
    std::size_t width = 4;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name
           << std::string(width - c.name.size() + 2, ' ') << "cases=" << c.cases;
        if (c.violation_count > 0) os << "  violations=" << c.violation_count;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
        for (const auto& v : c.violations) os << "        " << v << "\n";
    }
    os << (all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace schemelab
