#pragma once

#include <string>
#include <vector>

namespace mmm {

struct CheckResult {
    std::string claim;
    bool pass = false;
    std::string detail;  // optional supporting values
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Canonical suite order: lclass, prop52, thm18, weyl-compare, lemma31,
// transgression, gysin-axioms, vanishing, holo.
const std::vector<std::string>& suite_names();

// The fallback unless the MMM_TRUNC environment variable is set to a
// positive integer (at most 16), which then wins.
int default_depth(int fallback);

// Runs one suite; throws Error on an unknown name. Depth parameters take
// their defaults from the suite and are overridden by the MMM_TRUNC
// environment variable when it is set.
SuiteReport run_suite(const std::string& name);

std::string render_text(const std::vector<SuiteReport>& reports);
std::string render_json(const std::vector<SuiteReport>& reports);

}  // namespace mmm
