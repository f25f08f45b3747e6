#pragma once

#include <string>
#include <utility>
#include <vector>

namespace jordan {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    bool operator==(const Check&) const = default;
};

/// Ordered list of named pass/fail identity checks.
struct CheckReport {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.passed ? 0 : 1;
        return n;
    }
    bool operator==(const CheckReport&) const = default;
};

}  // namespace jordan
