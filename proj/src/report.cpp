#include "uqh/report.hpp"

namespace uqh {

VerificationReport VerificationReport::exact(std::string name, std::string equation,
                                             std::string context, double residual_coefficient) {
    VerificationReport r;
    r.name = std::move(name);
    r.equation = std::move(equation);
    r.mode = "exact";
    r.context = std::move(context);
    r.max_residual = residual_coefficient;
    r.pass = residual_coefficient == 0.0;
    return r;
}

VerificationReport VerificationReport::numeric(std::string name, std::string equation,
                                               std::string context, double residual,
                                               double tolerance) {
    VerificationReport r;
    r.name = std::move(name);
    r.equation = std::move(equation);
    r.mode = "numeric";
    r.context = std::move(context);
    r.max_residual = residual;
    r.pass = residual <= tolerance;
    return r;
}

Json to_json(const VerificationReport& r) {
    Json j{{"name", r.name},
           {"equation", r.equation},
           {"mode", r.mode},
           {"context", r.context},
           {"max_residual", r.max_residual},
           {"pass", r.pass}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

bool all_pass(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace uqh
