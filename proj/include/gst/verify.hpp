#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gst {

struct SuiteReport {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string log;  // one line per failure plus a summary
    bool ok() const { return failures == 0; }
};

std::vector<std::string> suite_names();
// size scales the number of random cases (or the order bound for exhaustive suites); 0 picks the default.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int size = 0);

}  // namespace gst
