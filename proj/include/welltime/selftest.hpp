#pragma once

#include <string>
#include <vector>

#include "welltime/quadrature.hpp"

namespace welltime {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool all_passed() const;
};

// Oracle-equivalence, cancellation-identity, classical-limit and
// normalization suites.  flip_branch_debug injects the wrong continuation
// branch (negative control: the cancellation identity must then fail).
SelftestReport run_selftest(const quad::QuadSpec& spec, bool flip_branch_debug = false);

} // namespace welltime
