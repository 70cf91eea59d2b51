#pragma once

#include <string>
#include <utility>
#include <vector>

namespace f2coh {

struct ReportItem {
    std::string label;
    std::string ref;     // the statement being checked
    bool passed = false;
    std::string detail;
};

using ReportItems = std::vector<ReportItem>;

inline ReportItem make_item(std::string label, std::string ref, bool passed, std::string detail = {}) {
    return {std::move(label), std::move(ref), passed, std::move(detail)};
}

inline bool all_passed(const ReportItems& items) {
    for (const auto& i : items)
        if (!i.passed) return false;
    return true;
}

inline void append(ReportItems& dst, ReportItems src) {
    for (auto& i : src) dst.push_back(std::move(i));
}

}  // namespace f2coh
