#pragma once
// Pair coupling rates derived from the Green tensor: coherent shift
// Omega_kR, cross-damping Gamma_kR, their frequency derivatives, spatial
// gradients, and the curl contractions that drive the nonconservative
// forces. Public values are SI; the dimensionless internal forms (units of
// Gamma0 for rates, Gamma0*k0 for gradients) are exposed for tests.

#include "dyad/units.hpp"

namespace dyad {

// All rates for one configuration. SI fields first, then the geometric
// context the downstream closed forms (dynamics/forces/emission) reuse.
struct CouplingRates {
    double omega_kr = 0.0;      // coherent coupling Omega_kR [rad/s]
    double gamma_kr = 0.0;      // cross-damping Gamma_kR [1/s]
    double domega_domega = 0.0; // d(Omega_kR)/d(omega), dimensionless
    double dgamma_domega = 0.0; // d(Gamma_kR)/d(omega), dimensionless
    Vec3 grad_omega = Vec3::Zero();  // nabla_R Omega_kR [rad/s/m]
    Vec3 grad_gamma = Vec3::Zero();  // nabla_R Gamma_kR [1/s/m]
    Vec3 lambda_ab = Vec3::Zero();   // -muhat_A x (curl Im Gt) . muhat_B
    Vec3 sigma_ab = Vec3::Zero();    //  muhat_A x (curl Re Gt) . muhat_B
    double gamma0 = 0.0;        // single-atom decay rate [1/s]

    // Context carried along for the closed forms.
    double omega0 = 0.0;        // transition frequency [rad/s]
    double k0 = 0.0;            // transition wavenumber [1/m]
    double x0 = 0.0;            // k0 * |R|
    Vec3 rhat = Vec3::UnitZ();  // unit separation, A -> B
    Vec3 mu_hat_a = Vec3::UnitX();
    Vec3 mu_hat_b = Vec3::UnitX();
    double mu_mag = 0.0;        // |mu| [C m]

    // Internal-unit views (rates in Gamma0, gradients in Gamma0*k0).
    double om() const { return omega_kr / gamma0; }
    double ga() const { return gamma_kr / gamma0; }
    Vec3 grad_om() const { return grad_omega / (gamma0 * k0); }
    Vec3 grad_ga() const { return grad_gamma / (gamma0 * k0); }
};

// Dimensionless rates at scaled separation x = k|R|: everything that does
// not depend on the absolute scales (Gamma0, k0, omega0). gamma0_over_omega0
// enters only the frequency derivatives.
struct DimlessRates {
    double om = 0.0;   // Omega_kR / Gamma0
    double ga = 0.0;   // Gamma_kR / Gamma0
    double dom = 0.0;  // d(Omega_kR)/d(omega), dimensionless
    double dga = 0.0;  // d(Gamma_kR)/d(omega), dimensionless
    Vec3 grad_om = Vec3::Zero();  // in Gamma0*k0
    Vec3 grad_ga = Vec3::Zero();  // in Gamma0*k0
    Vec3 lambda = Vec3::Zero();   // -muhat_A x (curl Im Gt) . muhat_B
    Vec3 sigma = Vec3::Zero();    //  muhat_A x (curl Re Gt) . muhat_B
};

DimlessRates dimensionless_rates(double x, const Vec3& rhat,
                                 const Vec3& mu_hat_a, const Vec3& mu_hat_b,
                                 double gamma0_over_omega0);

// SI rates for a configuration (validates cfg first).
CouplingRates coupling_rates(const DyadConfig& cfg);

// Independent SI path for the reconstruction invariant: with
// G_SI = (k0/4pi) Gt(k0 R), returns
//   omega_out = (1/(hbar eps0)) k0^2 mu_A . Re G_SI . mu_B
//   gamma_out = -(1/(hbar eps0)) k0^2 mu_A . Im G_SI . mu_B.
void coupling_from_si_green(const DyadConfig& cfg, double& omega_out,
                            double& gamma_out);

}  // namespace dyad
