#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riccati::verify {

struct Check {
    std::string name;
    double value = 0.0;     ///< measured magnitude (or floor value)
    double tolerance = 0.0; ///< bound the value is compared against
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    bool all_pass = false;
};

struct Options {
    std::uint64_t seed = 20260816ull; ///< RNG seed for random sweeps
    int n1 = 1, n2 = 1;               ///< resonance for superint-oscillator
};

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Run one verification suite; unknown names raise InvalidArgument.
Report run_suite(const std::string& name, const Options& options = {});

/// Render a report as JSON: {"suite", "checks":[{name,value,tolerance,pass}],
/// "all_pass"} with 17-significant-digit floats.
std::string to_json(const Report& report);

} // namespace riccati::verify
