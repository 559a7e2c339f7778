#pragma once

#include <vector>

#include "uqh/deformmap.hpp"
#include "uqh/report.hpp"

namespace uqh {

// Exact checks: polynomial basis, all denominators cleared, pass means an
// identically zero residual matrix over Q[h][s^{+-1}].

VerificationReport check_uq_relations_exact(const ExactGeneratorSet& gen,
                                            const std::string& context, const std::string& tag = "Eq7");
VerificationReport check_power_identity_exact(const ExactGeneratorSet& gen, int p,
                                              const std::string& context);
std::vector<VerificationReport> check_conjugation_identity_exact(const ExactGeneratorSet& gen,
                                                                 const std::string& context);
VerificationReport check_closure_commutator_exact(const DeformedSet& d, const std::string& context,
                                                  const std::string& tag = "Eq26");
VerificationReport check_hx_commutator_exact(const DeformedSet& d, const std::string& context,
                                             const std::string& tag = "Eq27");
std::vector<VerificationReport> check_hy_commutator_exact(const DeformedSet& d,
                                                          const std::string& context,
                                                          const std::string& tag = "Eq28");
std::vector<VerificationReport> check_x_lowering_commutator_exact(const DeformedSet& d,
                                                                  const std::string& context);
VerificationReport check_uv_series_exact(const DeformedSet& d, const std::string& context);
VerificationReport check_inversion_exact(const DeformedSet& d, const std::string& context,
                                         const std::string& tag = "Eq14");
VerificationReport check_jacobi_exact(const DeformedSet& d, const std::string& context);
VerificationReport check_h_zero_exact(const DeformedSet& d, const std::string& context);
VerificationReport check_grading_exact(const DeformedSet& d, const std::string& context);
std::vector<VerificationReport> check_casimir_exact(const ExactGeneratorSet& gen, int two_j,
                                                    const std::string& context);

/// Classical-limit relations over Q[h] plus the Casimir equality.
std::vector<VerificationReport> jordanian_limit_suite(int two_j);

/// The same relations evaluated at a concrete h (q = 1).
VerificationReport check_jordanian_numeric(int two_j, const NumericContext& ctx);

/// Building at q = 1 must equal building exactly and then substituting s = 1.
VerificationReport check_limit_coherence(int two_j);

// Numeric counterparts (scale-normalized residuals against ctx tolerances).

VerificationReport check_uq_relations_numeric(const NumericGeneratorSet& gen,
                                              const NumericContext& ctx, const std::string& context,
                                              const std::string& tag = "Eq7");
VerificationReport check_power_identity_numeric(const NumericGeneratorSet& gen, int p,
                                                const NumericContext& ctx,
                                                const std::string& context);
std::vector<VerificationReport> check_conjugation_identity_numeric(const NumericGeneratorSet& gen,
                                                                   const NumericContext& ctx,
                                                                   const std::string& context);
VerificationReport check_closure_commutator_numeric(const NumericDeformedSet& d,
                                                    const NumericContext& ctx,
                                                    const std::string& context,
                                                    const std::string& tag = "Eq26");
VerificationReport check_hx_commutator_numeric(const NumericDeformedSet& d,
                                               const NumericContext& ctx,
                                               const std::string& context,
                                               const std::string& tag = "Eq27");
std::vector<VerificationReport> check_hy_commutator_numeric(const NumericDeformedSet& d,
                                                            const NumericContext& ctx,
                                                            const std::string& context,
                                                            const std::string& tag = "Eq28");
std::vector<VerificationReport> check_x_lowering_commutator_numeric(const NumericDeformedSet& d,
                                                                    const NumericContext& ctx,
                                                                    const std::string& context);
VerificationReport check_uv_series_numeric(const NumericDeformedSet& d, const NumericContext& ctx,
                                           const std::string& context);
VerificationReport check_inversion_numeric(const NumericDeformedSet& d, const NumericContext& ctx,
                                           const std::string& context,
                                           const std::string& tag = "Eq14");
VerificationReport check_casimir_numeric(const NumericGeneratorSet& gen, int two_j,
                                         const NumericContext& ctx, const std::string& context);
VerificationReport check_h_zero_numeric(const RepSpec& spec, const NumericContext& ctx);
VerificationReport check_basis_equivalence(const RepSpec& spec, const NumericContext& ctx);

/// Matrix power of the raising generator against its closed-form entries.
VerificationReport check_xhat_basis_action(const RepSpec& spec, const NumericContext& ctx);
/// Three constructions of Yhat (matrix product, normal-ordered operator form,
/// repaired basis-action formula) compared pairwise in the symmetric basis.
std::vector<VerificationReport> normal_ordered_y_check(const RepSpec& spec,
                                                       const NumericContext& ctx);

} // namespace uqh
