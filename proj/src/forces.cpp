#include "dyad/forces.hpp"

#include "dyad/dynamics.hpp"
#include "dyad/green.hpp"
#include "dyad/oracle.hpp"

#include <cmath>
#include <numbers>

namespace dyad {

namespace {

struct ForceArgs {
    double tt, env, osc, hyp, sn, snh, cs, ch;
};

ForceArgs force_args(const CouplingRates& r, double T_s) {
    if (T_s < 0.0) throw validation_error("forces: T must be >= 0");
    ForceArgs a;
    a.tt = r.gamma0 * T_s;
    a.env = std::exp(-a.tt);
    a.osc = 2.0 * (r.om() * a.tt + r.dgamma_domega);
    a.hyp = 2.0 * (r.ga() * a.tt - r.domega_domega);
    a.sn = std::sin(a.osc);
    a.cs = std::cos(a.osc);
    a.snh = std::sinh(a.hyp);
    a.ch = std::cosh(a.hyp);
    return a;
}

double force_unit(const CouplingRates& r) {
    return codata2018().hbar * r.k0 * r.gamma0;
}

}  // namespace

ConservativeForces conservative_forces(const CouplingRates& r, double T_s) {
    const ForceArgs a = force_args(r, T_s);
    const Vec3 g_om = r.grad_om();
    const Vec3 g_ga = r.grad_ga();
    const double f = force_unit(r);

    ConservativeForces out;
    out.f_a = f * a.env * (a.sn * g_ga + a.snh * g_om);
    out.f_b = f * a.env * (a.sn * g_ga - a.snh * g_om);
    // Net evaluated directly from the common (nonreciprocal) part.
    out.f_net = f * 2.0 * a.env * a.sn * g_ga;
    return out;
}

NonconservativeForces nonconservative_forces(const CouplingRates& r,
                                             double T_s) {
    const ForceArgs a = force_args(r, T_s);
    const double pref =
        force_unit(r) * 0.75 * (r.gamma0 / r.omega0) * a.env;
    const Vec3& lam = r.lambda_ab;
    const Vec3& sig = r.sigma_ab;
    const double om = r.om();
    const double ga = r.ga();

    NonconservativeForces out;
    out.f_a = pref * (2.0 * (a.cs * om * lam - a.ch * ga * sig) -
                      (a.sn * lam - a.snh * sig));
    out.f_b = pref * (-2.0 * (a.cs * om * lam + a.ch * ga * sig) +
                      (a.sn * lam + a.snh * sig));
    // Independent evaluation of the sum (the om lam terms cancel exactly).
    out.f_net = pref * (-4.0 * a.ch * ga * sig + 2.0 * a.snh * sig);
    return out;
}

double offresonant_integral(const CouplingRates& r, int panels, int order) {
    if (panels < 1 || order < 2)
        throw validation_error("offresonant_integral: malformed resolution");
    const double x0 = r.x0;
    // J(x0) = integral_0^inf ds s^7/(s^2+1)^2 g(s x0) g'(s x0) with
    // g(y) = muhat_A . Gh(y) . muhat_B on the imaginary frequency axis and
    // g' = d/dy. Mapped through s = tan(u) onto u in (0, pi/2); the
    // integrand is finite at both ends (s^7 * s^-3 * s^-4 -> O(1) at 0,
    // e^{-2 s x0} kills infinity).
    const double ci = r.mu_hat_a.dot(r.mu_hat_b);
    const double cp = r.mu_hat_a.dot(r.rhat) * r.mu_hat_b.dot(r.rhat);
    const auto integrand_s = [&](double s) -> double {
        const double y = s * x0;
        if (y > 700.0) return 0.0;  // e^{-2y} underflow region
        // g and g' from the scalar radial parts of Gh.
        const double ey = std::exp(-y);
        const double iy1 = 1.0 / y, iy2 = iy1 * iy1, iy3 = iy2 * iy1,
                     iy4 = iy3 * iy1;
        const double g_i = -ey * (iy1 + iy2 + iy3);
        const double g_p = ey * (iy1 + 3.0 * iy2 + 3.0 * iy3);
        const double dg_i =
            ey * (iy1 + iy2 + iy3) - ey * (-iy2 - 2.0 * iy3 - 3.0 * iy4);
        const double dg_p = -ey * (iy1 + 3.0 * iy2 + 3.0 * iy3) +
                            ey * (-iy2 - 6.0 * iy3 - 9.0 * iy4);
        const double g = g_i * ci + g_p * cp;
        const double dg = dg_i * ci + dg_p * cp;
        const double s2 = s * s;
        return std::pow(s, 7) / ((s2 + 1.0) * (s2 + 1.0)) * g * dg;
    };
    const auto integrand_u = [&](double u) -> double {
        const double cu = std::cos(u);
        if (cu <= 0.0) return 0.0;
        const double s = std::tan(u);
        if (s <= 0.0) return 0.0;
        return integrand_s(s) / (cu * cu);  // ds = du / cos^2 u
    };
    return composite_gauss(integrand_u, 0.0, 0.5 * std::numbers::pi, panels,
                           order);
}

Vec3 offresonant_force(const DyadConfig& cfg, const CouplingRates& r,
                       double T_s, const QuadSpec& quad) {
    if (T_s < 0.0) throw validation_error("forces: T must be >= 0");
    if (quad.rel_tol <= 0.0 || quad.base_panels < 1 || quad.max_doublings < 0 ||
        quad.order < 2)
        throw validation_error("offresonant_force: malformed QuadSpec");
    if (std::abs(cfg.gamma0 - r.gamma0) > 1e-9 * r.gamma0 ||
        std::abs(cfg.x0() - r.x0) > 1e-9 * std::max(r.x0, 1.0))
        throw validation_error(
            "offresonant_force: rates were built from a different config");
    const double x0 = r.x0;

    int panels = quad.base_panels;
    double prev = offresonant_integral(r, panels, quad.order);
    double value = prev;
    bool converged = false;
    for (int d = 0; d < quad.max_doublings; ++d) {
        panels *= 2;
        value = offresonant_integral(r, panels, quad.order);
        const double scale = std::max(std::abs(value), 1e-300);
        if (std::abs(value - prev) <= quad.rel_tol * scale) {
            converged = true;
            break;
        }
        prev = value;
    }
    if (!converged)
        throw numerical_error(
            "offresonant_force: quadrature not converged at k0R = " +
            std::to_string(x0));

    // B(Tt) = cosh(2 dom) - 2 e^{-Tt} cosh(2 ga Tt - 2 dom).
    const ForceArgs fa = force_args(r, T_s);
    const double btt = std::cosh(2.0 * r.domega_domega) - 2.0 * fa.env * fa.ch;

    const double pref =
        force_unit(r) * (9.0 / (4.0 * std::numbers::pi)) * (r.gamma0 / r.omega0);
    return pref * value * btt * r.rhat;
}

double cm_displacement(const DyadConfig& cfg, const CouplingRates& r,
                       double T_s) {
    if (T_s < 0.0) throw validation_error("forces: T must be >= 0");
    const double tt = r.gamma0 * T_s;
    const double om = r.om();
    const double rr = 2.0 * om;
    const double rr2 = rr * rr;
    const Vec3 g_ga = r.grad_ga();
    const double dgds = g_ga.norm() * ((g_ga.dot(r.rhat) < 0.0) ? -1.0 : 1.0);

    const double env = std::exp(-tt);
    const double osc = 2.0 * om * tt;  // closed form carries no d/domega phases
    const double bracket = (1.0 + rr2) * osc -
                           2.0 * rr * (1.0 - env * std::cos(osc)) +
                           (1.0 - rr2) * env * std::sin(osc);
    const double scale =
        codata2018().hbar * r.k0 / (cfg.mass * r.gamma0);
    return scale * dgds * bracket / ((1.0 + rr2) * (1.0 + rr2));
}

ForceSample force_sample(const DyadConfig& cfg, const CouplingRates& r,
                         double T_s, const QuadSpec& quad) {
    ForceSample out;
    out.T = T_s;
    const auto c = conservative_forces(r, T_s);
    out.f_a_cons = c.f_a;
    out.f_b_cons = c.f_b;
    out.f_net_cons = c.f_net;
    const auto nc = nonconservative_forces(r, T_s);
    out.f_a_noncons = nc.f_a;
    out.f_b_noncons = nc.f_b;
    out.f_net_noncons = nc.f_net;
    out.f_offres_a = offresonant_force(cfg, r, T_s, quad);
    return out;
}

DisplacementCurve displacement_curve(const DyadConfig& base,
                                     const std::vector<double>& x_grid,
                                     double T_final_s) {
    base.require_valid();
    if (T_final_s < 0.0)
        throw validation_error("displacement_curve: T must be >= 0");
    DisplacementCurve out;
    out.t_final = T_final_s;
    out.mass = base.mass;
    out.grid.reserve(x_grid.size());
    const Vec3 rhat = base.r_vec.normalized();
    for (double x : x_grid) {
        if (x <= 0.0)
            throw validation_error("displacement_curve: k0R must be positive");
        DyadConfig cfg = base;
        cfg.r_vec = (x / base.k0()) * rhat;
        const CouplingRates r = coupling_rates(cfg);
        out.grid.emplace_back(x, cm_displacement(cfg, r, T_final_s));
    }
    return out;
}

ScalingAudit rydberg_scaling_audit(const std::vector<int>& n_list,
                                   double mass_kg, double x0) {
    if (n_list.size() < 2)
        throw validation_error("rydberg_scaling_audit: need >= 2 n values");
    ScalingAudit out;
    out.rows.reserve(n_list.size());
    for (int n : n_list) {
        const DyadConfig cfg = rydberg_pair(n, mass_kg, x0);
        const CouplingRates r = coupling_rates(cfg);
        // Peak net conservative force over Tt in [0, 4].
        double peak = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double T = (4.0 * i / 400.0) / cfg.gamma0;
            peak = std::max(peak, conservative_forces(r, T).f_net.norm());
        }
        const double s_cm = cm_displacement(cfg, r, 1.0 / cfg.gamma0);
        out.rows.push_back({n, peak, s_cm});
    }
    // Least-squares slope of log|y| vs log n.
    const auto slope = [&](auto getter) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = double(out.rows.size());
        for (const auto& row : out.rows) {
            const double lx = std::log(double(row.n));
            const double ly = std::log(std::abs(getter(row)));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        return (m * sxy - sx * sy) / (m * sxx - sx * sx);
    };
    out.f_net_exponent = slope([](const ScalingAuditRow& r) { return r.f_net_peak; });
    out.s_cm_exponent = slope([](const ScalingAuditRow& r) { return r.s_cm; });
    return out;
}

}  // namespace dyad
