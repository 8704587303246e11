#ifndef SCHEMELAB_REPORT_HPP
#define SCHEMELAB_REPORT_HPP

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace schemelab {

// One named check inside a verification report. Violations are counted in
// full but only the first few are kept verbatim.
struct CheckResult {
    static constexpr std::size_t kMaxSamples = 20;

    std::string name;
    bool passed = true;
    long long cases = 0;
    long long violation_count = 0;
    std::vector<std::string> violations;
    std::string note;

    void fail(const std::string& message) {
        passed = false;
        ++violation_count;
        if (violations.size() < kMaxSamples) violations.push_back(message);
    }
};

struct Report {
    std::string title;
    std::vector<std::string> header;  // free-form context lines (seed, caps, ...)
    // deque: add() hands out references that later add() calls must not move
    std::deque<CheckResult> checks;

    CheckResult& add(const std::string& name) {
        checks.push_back(CheckResult{});
        checks.back().name = name;
        return checks.back();
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_text() const;
};

}  // namespace schemelab

#endif
