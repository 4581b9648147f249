#pragma once

#include "logverlinde/modular.hpp"
#include "logverlinde/report.hpp"

namespace verlinde {

struct SuiteConfig {
    int p = 2;
    int d = 1;
    int trunc = 400;
    double tol = 1e-8;
    Tau tau{0.0, 2.0};
};

// Each suite bundles the identity checks of one subsystem into a Report.
Report run_fusion_suite(const SuiteConfig& cfg);
Report run_hopf_suite(const SuiteConfig& cfg);
Report run_modular_suite(const SuiteConfig& cfg);
Report run_jordan_suite(const SuiteConfig& cfg);
Report run_sf_suite(const SuiteConfig& cfg);

// Concatenation of all of the above, in a fixed order.
Report run_all_suites(const SuiteConfig& cfg);

}  // namespace verlinde
