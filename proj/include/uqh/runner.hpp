#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uqh/coalgebra.hpp"
#include "uqh/report.hpp"

namespace uqh {

/// One CLI invocation, fully resolved. Numeric mode requires a NumericContext
/// (explicit q/h or seeded sampling); exact mode ignores it.
struct RunConfig {
    std::string command = "verify"; // coeffs|rep|verify|coproduct|limits|all
    int two_j = 1;                  // rep
    int two_j_max = 4;              // verify/limits/all
    int two_j_left = 1;             // coproduct
    int two_j_right = 1;
    std::string which = "uq";       // coproduct: uq|qh|uh
    std::string mode = "exact";     // exact|numeric|both
    int max_n = 6;                  // coeffs
    Basis basis = Basis::polynomial;
    bool have_q = false;
    bool have_h = false;
    NumericContext ctx;
    std::string format = "json";    // rep: json|csv
    std::string report_path;        // empty: stdout only
    std::uint64_t seed = 12345;
    int numeric_points = 5;
    bool inject_fault = false;      // testing hook for the exit-status contract
};

/// q from the annulus 0.5 < |q| < 2, at least 0.05 away from every 2k-th root
/// of unity with k <= 15.
std::complex<double> sample_generic_q(std::mt19937_64& rng);
/// h from |h| < 1, bounded away from 0.
std::complex<double> sample_h(std::mt19937_64& rng);

std::vector<VerificationReport> verify_suite_exact(int two_j_max, bool inject_fault = false);
std::vector<VerificationReport> verify_suite_numeric(int two_j_max, const NumericContext& ctx,
                                                     const std::string& point_label,
                                                     bool inject_fault = false);
std::vector<VerificationReport> limits_suite(int two_j_max, const NumericContext& ctx);
std::vector<VerificationReport> coproduct_suite(int two_j_left, int two_j_right,
                                                const std::string& which, const std::string& mode,
                                                const NumericContext& ctx);

Json coefficient_table(int max_n, bool have_q, const NumericContext& ctx);
Json representation_dump(const RunConfig& cfg);
std::string representation_csv(const RunConfig& cfg);

/// Runs the configured command, writes the report, prints one line per check,
/// and returns the process exit status (0 only if everything passed).
int run(const RunConfig& cfg);

} // namespace uqh
