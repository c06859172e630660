#pragma once
// Angular distribution of the emitted photon and its momentum flux.
//
// Differential rate into direction khat (solid angle Theta), in 1/s/sr:
//
//   dGamma/dTheta = Gamma0 * e^{-Tt} * {
//       -(3/8pi) (muhat_A.(I-kk).muhat_B) [ cos(x0 khat.rhat) sinh(2 ga Tt - 2 dom)
//                                           + s * sin(x0 khat.rhat) * sin(...) ]
//       + same-atom term (consistent mode only) }
//
// where the same-atom term is
//   (3/16pi) [muhat_A.(I-kk).muhat_A + muhat_B.(I-kk).muhat_B]
//       * cosh(2 ga Tt - 2 dom).
//
// Two switches:
//  - EmissionMode::as_printed keeps only the interference (cross) term; its
//    sphere integral is the interference part of dP_gamma/dT,
//    -2 Gamma_kR e^{-Tt} sinh(2 ga Tt - 2 dom). EmissionMode::consistent
//    adds the same-atom term so the sphere integral equals the full
//    dP_gamma/dT. The difference of the two totals is exactly
//    Gamma0 e^{-Tt} cosh(2 ga Tt - 2 dom).
//  - AsymmetrySign selects the sign convention of the odd (directional)
//    term: `conserving` uses -sin(x0 c) sin(2(om Tt + dga)) and satisfies
//    global momentum balance against the net conservative force;
//    `printed` uses +sin(x0 c) sin(2 om Tt - 2 dga), the opposite overall
//    sign, kept for comparison. photon_momentum_rate always uses
//    `conserving`; the self-test reports which one balances.
//
// The prefactor is fixed by the normalization requirement above (it is
// -(k0^3 mu_A.(I-kk).mu_B)/(8 pi^2 eps0 hbar) in SI), consistent with the
// plane-wave identity  integral dTheta (I-kk) e^{i x khat.rhat} = -4pi Im Gt.

#include "dyad/coupling.hpp"

#include <vector>

namespace dyad {

// Product quadrature on the unit sphere: Gauss-Legendre in cos(theta) times
// a uniform trapezoid in azimuth (exact for trigonometric polynomials).
// Weights sum to 4pi to 1e-12; exact for spherical harmonics up to the
// stated order.
struct AngularGrid {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int order = 0;

    static AngularGrid product_gauss(int order);
    // Order heuristic resolving the e^{i x0 khat.rhat} oscillation.
    static int order_for(double x0);
    // Grid aligned so the polar axis is rhat (improves symmetry of the
    // integrand); nodes are still global unit vectors.
    static AngularGrid product_gauss_about(int order, const Vec3& axis);
};

enum class EmissionMode { as_printed, consistent };
enum class AsymmetrySign { printed, conserving };

// Differential emission rate [1/s/sr] into khat at time T.
double angular_rate(const CouplingRates& rates, const DyadConfig& cfg,
                    double T_s, const Vec3& khat,
                    EmissionMode mode = EmissionMode::consistent,
                    AsymmetrySign sign = AsymmetrySign::conserving);

struct AngularRateSample {
    double T = 0.0;
    EmissionMode mode = EmissionMode::consistent;
    std::vector<double> rate;     // [1/s/sr], one per grid node
    double total_rate = 0.0;      // quadrature of rate over the sphere [1/s]
    Vec3 momentum_rate = Vec3::Zero();  // hbar k0 integral khat*rate [N]
};

AngularRateSample angular_sample(const CouplingRates& rates,
                                 const DyadConfig& cfg, double T_s,
                                 const AngularGrid& grid,
                                 EmissionMode mode = EmissionMode::consistent,
                                 AsymmetrySign sign = AsymmetrySign::conserving);

// Net photon momentum flux [N] with the conserving sign. Fails loudly
// (numerical_error) if the supplied grid is under-resolved: the result is
// compared against a refined grid and must agree to grid_rel_tol.
Vec3 photon_momentum_rate(const CouplingRates& rates, const DyadConfig& cfg,
                          double T_s, const AngularGrid& grid,
                          double grid_rel_tol = 1e-8);

}  // namespace dyad
