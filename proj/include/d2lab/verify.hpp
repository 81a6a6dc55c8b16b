// SPDX-License-Identifier: MIT
//
// Verification suites. Two layers:
//
//  * module suites (phi, block, ladder, ma, geometry, radial, gallery) that
//    check invariants and trends for whatever configuration the caller
//    passes, and
//  * a pinned acceptance battery of twelve quantitative criteria, each with
//    its own fixed configuration and thresholds.
//
// run_suite gives the assertive standalone form of a module suite (it may
// legitimately fail for profiles whose decay is too slow at desk scale);
// run_all runs configuration-safe variants of every module suite plus the
// full pinned battery.

#pragma once

#include <string>
#include <vector>

#include "d2lab/ladder.hpp"
#include "d2lab/sweep.hpp"

#include "json.hpp"

namespace d2lab::verify {

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
    bool pass() const;
};

struct Options {
    std::string phi = "log"; ///< selector: log | loglog | pow:<alpha>
    int n = 3;
    int K = 10;
    bool signed_sum = true;
    ladder::TRule t_rule = ladder::TRule::harmonic;
    unsigned seed = 0;
    sweep::Exec exec = sweep::Exec::parallel;
};

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

/// Standalone, assertive module suite. Throws std::invalid_argument for an
/// unknown name or an invalid configuration.
Suite run_suite(const std::string& name, const Options& opts);

/// One pinned acceptance criterion, index 1..12. Criterion 12 runs in its
/// in-process form (re-rendering reports and comparing bytes); the CLI
/// round-trip form lives in the acceptance runner.
Check criterion(int index, const Options& opts);

/// All twelve criteria as one suite.
Suite acceptance_suite(const Options& opts);

/// Configuration-safe module suites for the caller's options plus the
/// pinned acceptance battery.
std::vector<Suite> run_all(const Options& opts);

std::string report_text(const std::vector<Suite>& suites);
nlohmann::ordered_json report_json(const std::vector<Suite>& suites);

} // namespace d2lab::verify
