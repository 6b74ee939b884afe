#pragma once

#include <string>
#include <vector>

namespace g2calc {

/// One named invariant check; the name identifies the mathematical statement
/// it verifies and the claim spells that statement out.
struct SelftestCase {
    std::string name;
    std::string claim;
};

struct SelftestResult {
    std::string name;
    std::string claim;
    bool passed;
    std::string detail;  // empty on success, failure description otherwise
};

/// The checks in run order, without running them.
std::vector<SelftestCase> selftest_list();

/// Runs every check. Randomized cases draw from a generator seeded with a
/// fixed default, overridable through the G2CALC_SEED environment variable,
/// and reseeded per run so identical invocations give identical reports.
std::vector<SelftestResult> selftest_run();

/// Scope statement appended to every selftest report: identities are
/// verified on star-shaped coordinate charts, and statements that need a
/// closed manifold are documented as out of scope rather than tested.
std::string selftest_scope_note();

}  // namespace g2calc
