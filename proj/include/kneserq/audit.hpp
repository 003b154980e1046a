#pragma once

#include "kneserq/invariants.hpp"

#include <string>
#include <vector>

namespace kq {

struct AuditCheck {
    std::string line; // "<check> <graph>: <observed facts>"
    bool ok = false;
};

struct CriterionReport {
    int number = 0;
    std::string title;
    std::vector<AuditCheck> checks;

    bool passed() const;
    int failures() const;
};

struct AuditOptions {
    int max_n = 1 << 20; // caps every grid from above; the grids' own bounds still apply
    SolverLimits limits;
};

inline constexpr int kCriterionCount = 10;

// A check that throws is recorded as failed with the error text, never skipped.
CriterionReport audit_criterion(int number, const AuditOptions &opts = {});
std::vector<CriterionReport> audit_all(const AuditOptions &opts = {});

} // namespace kq
