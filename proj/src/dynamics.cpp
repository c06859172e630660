#include "dyad/dynamics.hpp"

#include <cmath>
#include <iostream>

namespace dyad {

namespace {

struct Args {
    double tt;      // Gamma0 * T
    double osc;     // 2 (om*Tt + dga): oscillatory argument
    double hyp;     // 2 (ga*Tt - dom): hyperbolic argument
};

Args args_at(const CouplingRates& r, double T_s) {
    if (T_s < 0.0) throw validation_error("dynamics: T must be >= 0");
    const double tt = r.gamma0 * T_s;
    Args a;
    a.tt = tt;
    a.osc = 2.0 * (r.om() * tt + r.dgamma_domega);
    a.hyp = 2.0 * (r.ga() * tt - r.domega_domega);
    return a;
}

}  // namespace

AmplitudePair amplitudes(const CouplingRates& r, double T_s) {
    const Args a = args_at(r, T_s);
    // z = (om Tt + dga) + i (dom - ga Tt); note Im z = -hyp/2.
    const complexd z(0.5 * a.osc, -0.5 * a.hyp);
    const complexd phase = std::exp(complexd(0.0, -r.omega0 * T_s)) *
                           std::exp(complexd(-0.5 * a.tt, 0.0));
    AmplitudePair out;
    out.T = T_s;
    out.a_plus = complexd(0.0, -1.0) * phase * std::cos(z);
    out.b_plus = -phase * std::sin(z);
    return out;
}

PopulationSample populations(const CouplingRates& r, double T_s) {
    const Args a = args_at(r, T_s);
    const double env = std::exp(-a.tt);
    const double ch = std::cosh(a.hyp);
    const double cs = std::cos(a.osc);

    PopulationSample out;
    out.T = T_s;
    out.p_a = 0.5 * env * (ch + cs);
    out.p_b = 0.5 * env * (ch - cs);
    out.p_gamma = std::cosh(2.0 * r.domega_domega) - env * ch;
    out.unitarity_sum = out.p_a + out.p_b + out.p_gamma;
    return out;
}

double emission_rate_total(const CouplingRates& r, double T_s) {
    const Args a = args_at(r, T_s);
    const double env = std::exp(-a.tt);
    // d(P_gamma)/dT = Gamma0 e^{-Tt} [cosh(hyp) - 2 ga sinh(hyp)].
    return r.gamma0 * env * (std::cosh(a.hyp) - 2.0 * r.ga() * std::sinh(a.hyp));
}

Eigen::Matrix2cd rabi_propagator(double omega_L, double t_s, double omega0,
                                 double gamma0) {
    if (omega_L <= 0.0 || gamma0 <= 0.0 || omega0 <= 0.0)
        throw validation_error("rabi_propagator: rates must be positive");
    if (t_s < 0.0) throw validation_error("rabi_propagator: t must be >= 0");
    if (omega_L < 100.0 * gamma0)
        std::cerr << "note: drive omega_L < 100 gamma0; the sudden-excitation "
                     "approximation degrades at this ratio\n";
    const double half = 0.5 * omega_L * t_s;
    const complexd decay =
        std::exp(complexd(-0.5 * gamma0 * t_s, -omega0 * t_s));
    Eigen::Matrix2cd u;
    u(0, 0) = std::cos(half);
    u(0, 1) = complexd(0.0, -1.0) * std::sin(half);
    u(1, 0) = decay * complexd(0.0, -1.0) * std::sin(half);
    u(1, 1) = decay * std::cos(half);
    return u;
}

}  // namespace dyad
