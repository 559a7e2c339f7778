#include <CLI11.hpp>

#include <iostream>

#include "uqh/runner.hpp"

namespace {

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void add_numeric_flags(CLI::App* cmd, uqh::RunConfig& cfg, std::string& q_text,
                       std::string& h_text) {
    cmd->add_option("--numeric-q", q_text, "complex q as RE,IM");
    cmd->add_option("--numeric-h", h_text, "complex h as RE,IM");
    cmd->add_option("--tol", cfg.ctx.tol_abs, "absolute tolerance for numeric checks");
    cmd->add_option("--seed", cfg.seed, "seed for sampled numeric points");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for the two-parameter deformation of sl(2)"};
    app.require_subcommand(1);

    uqh::RunConfig cfg;
    std::string q_text, h_text, basis_text = "polynomial";

    auto* coeffs = app.add_subcommand("coeffs", "emit the alpha/beta coefficient tables");
    coeffs->add_option("--max-n", cfg.max_n, "largest series index")->check(CLI::NonNegativeNumber);
    coeffs->add_option("--numeric-q", q_text, "complex q as RE,IM");
    coeffs->add_option("--report", cfg.report_path, "output JSON path");

    auto* rep = app.add_subcommand("rep", "dump generator matrices for one representation");
    rep->add_option("--two-j", cfg.two_j, "2j label")->required()->check(CLI::NonNegativeNumber);
    rep->add_option("--basis", basis_text, "polynomial|symmetric");
    rep->add_option("--format", cfg.format, "json|csv");
    rep->add_option("--report", cfg.report_path, "output path");
    add_numeric_flags(rep, cfg, q_text, h_text);

    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--two-j-max", cfg.two_j_max, "verify every 2j up to this")
        ->check(CLI::PositiveNumber);
    verify->add_option("--mode", cfg.mode, "exact|numeric|both");
    verify->add_option("--points", cfg.numeric_points, "number of sampled numeric points");
    verify->add_option("--report", cfg.report_path, "output JSON path");
    verify->add_flag("--inject-fault", cfg.inject_fault,
                     "perturb the deformed matrices (exit-status self test)");
    add_numeric_flags(verify, cfg, q_text, h_text);

    auto* limits = app.add_subcommand("limits", "classical and h->0 limit suites");
    limits->add_option("--two-j-max", cfg.two_j_max, "largest 2j")->check(CLI::PositiveNumber);
    limits->add_option("--report", cfg.report_path, "output JSON path");
    add_numeric_flags(limits, cfg, q_text, h_text);

    auto* coproduct = app.add_subcommand("coproduct", "tensor-product coproduct checks");
    coproduct->add_option("--two-j-left", cfg.two_j_left, "left factor 2j")->required();
    coproduct->add_option("--two-j-right", cfg.two_j_right, "right factor 2j")->required();
    coproduct->add_option("--which", cfg.which, "uq|qh|uh");
    coproduct->add_option("--mode", cfg.mode, "exact|numeric|both");
    coproduct->add_option("--report", cfg.report_path, "output JSON path");
    add_numeric_flags(coproduct, cfg, q_text, h_text);

    auto* all = app.add_subcommand("all", "verify + limits + coproducts + coefficient table");
    all->add_option("--two-j-max", cfg.two_j_max, "largest 2j")->check(CLI::PositiveNumber);
    all->add_option("--max-n", cfg.max_n, "coefficient table size");
    all->add_option("--points", cfg.numeric_points, "number of sampled numeric points");
    all->add_option("--report", cfg.report_path, "output JSON path");
    all->add_flag("--inject-fault", cfg.inject_fault, "perturb the deformed matrices");
    add_numeric_flags(all, cfg, q_text, h_text);

    CLI11_PARSE(app, argc, argv);

    try {
        if (coeffs->parsed()) cfg.command = "coeffs";
        if (rep->parsed()) cfg.command = "rep";
        if (verify->parsed()) cfg.command = "verify";
        if (limits->parsed()) cfg.command = "limits";
        if (coproduct->parsed()) cfg.command = "coproduct";
        if (all->parsed()) cfg.command = "all";

        if (basis_text == "symmetric") {
            cfg.basis = uqh::Basis::symmetric;
        } else if (basis_text != "polynomial") {
            throw uqh::ConfigError("unknown basis: " + basis_text);
        }
        if (!q_text.empty()) {
            cfg.ctx.q = parse_complex(q_text);
            cfg.have_q = true;
        }
        if (!h_text.empty()) {
            cfg.ctx.h = parse_complex(h_text);
            cfg.have_h = true;
        }
        return uqh::run(cfg);
    } catch (const uqh::NonGenericQ& e) {
        std::cerr << "error: non-generic q (q-integer index " << e.q_integer_index
                  << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
