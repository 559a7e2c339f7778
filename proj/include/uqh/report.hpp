#pragma once

#include <string>
#include <vector>

#include "uqh/json_io.hpp"

namespace uqh {

/// Outcome of one identity check. In exact mode a pass means an identically
/// zero residual matrix; max_residual then reports the largest surviving
/// rational coefficient (0 on pass). In numeric mode max_residual is the
/// scale-normalized residual max|L-R|/max(1, ||L||, ||R||).
struct VerificationReport {
    std::string name;      // what was checked, e.g. "closure_commutator_xy"
    std::string equation;  // stable tag in report files, e.g. "Eq26"
    std::string mode;      // "exact" | "numeric"
    std::string context;   // e.g. "two_j=4" or "pair=1x2"
    double max_residual = 0.0;
    bool pass = false;
    std::string note;

    static VerificationReport exact(std::string name, std::string equation, std::string context,
                                    double residual_coefficient);
    static VerificationReport numeric(std::string name, std::string equation, std::string context,
                                      double residual, double tolerance);
};

Json to_json(const VerificationReport& r);

bool all_pass(const std::vector<VerificationReport>& rs);

} // namespace uqh
