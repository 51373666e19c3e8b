#pragma once

// Named cross-check suites. Each check compares two independent derivations
// and keeps the first disagreeing coefficient as its counterexample.

#include "lcd/kernels.hpp"
#include "lcd/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcd {

struct CheckResult {
    std::string name;
    bool passed = true;
    // Observations are reported but never change the exit status.
    bool gating = true;
    std::string detail;
    std::optional<std::string> counterexample;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    void append(const VerifyReport& other);
};

struct CorruptCell {
    unsigned g = 1;
    unsigned n = 4;
};

struct VerifyOptions {
    unsigned oracle_n_max = 8;
    unsigned total_n_max = 30;
    unsigned closed_form_n_max = 40;
    unsigned hz_n_max = 12;
    unsigned hz_oracle_n_max = 8;
    unsigned hz_points = 8;
    unsigned g_max = 6;
    unsigned shapes_n_max = 6;
    unsigned cg_m_n_max = 7;
    unsigned mm_n_max = 14;
    unsigned mm_fiber_n_max = 10;
    std::vector<unsigned> sigmas{1, 2, 3};
    std::vector<unsigned> mm_genera{1, 2};
    kernels::Exec exec = kernels::Exec::parallel;
    oracle::EnumerationLimits limits{};
    // Adds 1 to one cell of the recursion table before comparing it.
    std::optional<CorruptCell> corrupt;
};

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"oracle", "hz",  "theorem3",    "shapes",
                                                "mm",     "asymptotics", "all"};
    return names;
}

VerifyReport verify_oracle(const VerifyOptions& opt);
VerifyReport verify_hz(const VerifyOptions& opt);
VerifyReport verify_theorem3(const VerifyOptions& opt);
VerifyReport verify_shapes(const VerifyOptions& opt);
VerifyReport verify_mm(const VerifyOptions& opt);
VerifyReport verify_asymptotics(const VerifyOptions& opt);
// Dispatches on a suite name from verify_suite_names().
VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace lcd
