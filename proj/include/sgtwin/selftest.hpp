#ifndef SGTWIN_SELFTEST_HPP
#define SGTWIN_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

#include "sgtwin/spinops.hpp"

// Invariant suite behind the `selftest` subcommand: spin algebra
// identities, device-operator properties, pipeline density validity and
// the closed-form equivalence, each with its tolerance.

namespace sgtwin {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    double worst = 0;      // worst deviation observed
    double tolerance = 0;  // threshold it was held against
};

// Test hooks. d1 replaces the small-d matrix used by the rotation-identity
// checks; the fault-injection path of the CLI routes through it.
struct SelftestHooks {
    std::function<SpinOperator(double)> d1;
};

std::vector<SelftestCheck> run_selftest(const SelftestHooks& hooks = {});

bool all_passed(const std::vector<SelftestCheck>& checks);

}  // namespace sgtwin

#endif
