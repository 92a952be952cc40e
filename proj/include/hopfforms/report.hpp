#ifndef HOPFFORMS_REPORT_HPP
#define HOPFFORMS_REPORT_HPP

#include <string>
#include <vector>

namespace hopfforms {

/// One verified identity: name, verdict, and a counterexample locator
/// (basis index / pair / triple) when the check failed.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string where;  // empty on pass
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
    void add(std::string name, bool pass, std::string where = "") {
        checks.push_back({std::move(name), pass, std::move(where)});
    }
    void append(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix + c.name, c.pass, c.where});
    }
};

}  // namespace hopfforms

#endif
