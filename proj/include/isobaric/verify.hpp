#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace isobaric {

struct SuiteReport {
    std::string suite;
    int checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// partitions, hessenberg, roots, companion, mf
const std::vector<std::string>& suite_names();

/// Runs one self-consistency suite up to degree max_n. "all" is not accepted
/// here; callers loop over suite_names().
SuiteReport run_suite(std::string_view suite, int max_n);

} // namespace isobaric
