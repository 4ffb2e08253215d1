#include "halg/report.hpp"

#include <sstream>

namespace halg {

std::string CheckReport::summary() const {
    std::ostringstream out;
    out << check << ": " << (ok ? "pass" : "FAIL");
    if (ok) return out.str();
    out << " (" << failure_count
        << (failure_count == 1 ? " violation)" : " violations)");
    for (const auto& w : witnesses) {
        out << "\n  " << w.axiom << " at (";
        for (std::size_t i = 0; i < w.elements.size(); ++i) {
            if (i) out << ", ";
            out << w.elements[i];
        }
        out << "): residual";
        for (const auto& [label, value] : w.residual)
            out << " " << label << " = " << value << ";";
    }
    if (failure_count > witnesses.size())
        out << "\n  ... " << (failure_count - witnesses.size()) << " more";
    return out.str();
}

} // namespace halg
