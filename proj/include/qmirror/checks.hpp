#pragma once

#include <string>
#include <vector>

namespace qmirror {

struct CheckResult {
    std::string name;
    bool passed;
    double measured;   // deviation or value being judged
    double tolerance;  // threshold it is judged against
    std::string detail;
};

// Every module invariant, evaluated at reference parameters. All checks run
// in seconds; a fresh build passes all of them.
std::vector<CheckResult> run_all_checks();

// Render as JSON (array of objects, fixed field order).
std::string checks_to_json(const std::vector<CheckResult>& results);

}  // namespace qmirror
