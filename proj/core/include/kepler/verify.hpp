#ifndef KEPLER_VERIFY_HPP
#define KEPLER_VERIFY_HPP

#include <string>
#include <vector>

namespace kepler::verify {

// One measured check inside a suite.
struct CheckLine {
    std::string label;
    double measured = 0.0;  // the quantity compared against the threshold
    double threshold = 0.0; // pass iff measured <= threshold
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::string description;
    bool pass = true;
    std::vector<CheckLine> lines;

    void check(const std::string& label, double measured, double threshold);
};

// Registered suite names in criterion order.
std::vector<std::string> suite_names();

// Run one suite by name (throws domain_error for unknown names).
SuiteReport run_suite(const std::string& name);

std::vector<SuiteReport> run_all();

} // namespace kepler::verify

#endif
