#include "dyad/coupling.hpp"

#include "dyad/green.hpp"

#include <cmath>
#include <numbers>

namespace dyad {

// Conventions (internal units Gamma0 = k0 = hbar = 1):
//   Omega_kR - i Gamma_kR = (3 Gamma0 / 4) muhat_A . Gt(x) . muhat_B
//   d/domega at resonance: (Gamma0/omega0)(3/4) [3 g + x g'] with the
//     cancellation-free radial combinations from radial_parts().
//   nabla_R Omega_kR =  Gamma0 k0 (3/4) Re nabla~ g,
//   nabla_R Gamma_kR = -Gamma0 k0 (3/4) Im nabla~ g,  g = muhat_A.Gt.muhat_B.
//   lambda = -muhat_A x (curl Im Gt) . muhat_B,
//   sigma  =  muhat_A x (curl Re Gt) . muhat_B   (both dimensionless; their
//     SI counterparts carry k0^2 |mu|^2 / 4pi, applied in forces.cpp).

DimlessRates dimensionless_rates(double x, const Vec3& rhat,
                                 const Vec3& mu_hat_a, const Vec3& mu_hat_b,
                                 double gamma0_over_omega0) {
    if (std::abs(mu_hat_a.norm() - 1.0) > 1e-12 ||
        std::abs(mu_hat_b.norm() - 1.0) > 1e-12)
        throw validation_error("dimensionless_rates: dipole directions must be unit vectors");

    const GreenEval ge = green_full(x, rhat);
    const RadialParts rp = radial_parts(x);

    const double ci = mu_hat_a.dot(mu_hat_b);
    const double cp = mu_hat_a.dot(rhat) * mu_hat_b.dot(rhat);

    const complexd g = rp.f_i * ci + rp.f_p * cp;
    const complexd dg_domega =
        rp.three_f_plus_x_df_i * ci + rp.three_f_plus_x_df_p * cp;

    DimlessRates out;
    out.om = 0.75 * g.real();
    out.ga = -0.75 * g.imag();
    out.dom = gamma0_over_omega0 * 0.75 * dg_domega.real();
    out.dga = -gamma0_over_omega0 * 0.75 * dg_domega.imag();

    const Eigen::Vector3cd mua_c = mu_hat_a.cast<complexd>();
    const Eigen::Vector3cd mub_c = mu_hat_b.cast<complexd>();
    Eigen::Vector3cd grad_g;
    for (int l = 0; l < 3; ++l)
        grad_g(l) = mua_c.transpose() * (ge.gradG[l] * mub_c);
    out.grad_om = 0.75 * grad_g.real();
    out.grad_ga = -0.75 * grad_g.imag();

    const Eigen::Vector3cd curl_mub = ge.curlG * mub_c;
    const Vec3 curl_im = curl_mub.imag();
    const Vec3 curl_re = curl_mub.real();
    out.lambda = -mu_hat_a.cross(curl_im);
    out.sigma = mu_hat_a.cross(curl_re);
    return out;
}

CouplingRates coupling_rates(const DyadConfig& cfg) {
    cfg.require_valid();
    const double k0 = cfg.k0();
    const double R = cfg.r_vec.norm();
    const double x0 = k0 * R;
    const Vec3 rhat = cfg.r_vec / R;
    const Vec3 mua = cfg.mu_a.normalized();
    const Vec3 mub = cfg.mu_b.normalized();

    const DimlessRates d =
        dimensionless_rates(x0, rhat, mua, mub, cfg.gamma0 / cfg.omega0);

    CouplingRates out;
    out.gamma0 = cfg.gamma0;
    out.omega_kr = d.om * cfg.gamma0;
    out.gamma_kr = d.ga * cfg.gamma0;
    out.domega_domega = d.dom;
    out.dgamma_domega = d.dga;
    out.grad_omega = d.grad_om * cfg.gamma0 * k0;
    out.grad_gamma = d.grad_ga * cfg.gamma0 * k0;
    out.lambda_ab = d.lambda;
    out.sigma_ab = d.sigma;

    out.omega0 = cfg.omega0;
    out.k0 = k0;
    out.x0 = x0;
    out.rhat = rhat;
    out.mu_hat_a = mua;
    out.mu_hat_b = mub;
    out.mu_mag = cfg.mu_a.norm();
    return out;
}

void coupling_from_si_green(const DyadConfig& cfg, double& omega_out,
                            double& gamma_out) {
    cfg.require_valid();
    const auto k = codata2018();
    const double k0 = cfg.k0();
    const double R = cfg.r_vec.norm();
    const Vec3 rhat = cfg.r_vec / R;
    const GreenEval ge = green(k0 * R, rhat);
    const CMat3 G_si = (k0 / (4.0 * std::numbers::pi)) * ge.G;
    const complexd s = (cfg.mu_a.cast<complexd>().transpose() *
                        (G_si * cfg.mu_b.cast<complexd>()))(0) *
                       (k0 * k0 / (k.hbar * k.eps0));
    omega_out = s.real();
    gamma_out = -s.imag();
}

}  // namespace dyad
