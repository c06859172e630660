#include "dyad/emission.hpp"

#include "dyad/oracle.hpp"

#include <cmath>
#include <numbers>

namespace dyad {

namespace {

constexpr double kPi = std::numbers::pi;

void check_pair(const CouplingRates& rates, const DyadConfig& cfg,
                const char* who) {
    if (std::abs(cfg.gamma0 - rates.gamma0) > 1e-9 * rates.gamma0 ||
        std::abs(cfg.x0() - rates.x0) > 1e-9 * std::max(rates.x0, 1.0))
        throw validation_error(std::string(who) +
                               ": rates were built from a different config");
}

struct EmissionArgs {
    double tt, osc, osc_printed, hyp;
};

EmissionArgs emission_args(const CouplingRates& r, double T_s) {
    if (T_s < 0.0) throw validation_error("emission: T must be >= 0");
    EmissionArgs a;
    a.tt = r.gamma0 * T_s;
    a.osc = 2.0 * (r.om() * a.tt + r.dgamma_domega);
    a.osc_printed = 2.0 * r.om() * a.tt - 2.0 * r.dgamma_domega;
    a.hyp = 2.0 * (r.ga() * a.tt - r.domega_domega);
    return a;
}

double rate_at(const CouplingRates& r, const EmissionArgs& a, const Vec3& khat,
               EmissionMode mode, AsymmetrySign sign) {
    const double cross =
        r.mu_hat_a.dot(r.mu_hat_b) - r.mu_hat_a.dot(khat) * r.mu_hat_b.dot(khat);
    const double phase = r.x0 * khat.dot(r.rhat);
    const double odd = (sign == AsymmetrySign::conserving)
                           ? -std::sin(phase) * std::sin(a.osc)
                           : std::sin(phase) * std::sin(a.osc_printed);
    double value = -(3.0 / (8.0 * kPi)) * cross *
                   (std::cos(phase) * std::sinh(a.hyp) + odd);
    if (mode == EmissionMode::consistent) {
        const double self_a = 1.0 - std::pow(r.mu_hat_a.dot(khat), 2);
        const double self_b = 1.0 - std::pow(r.mu_hat_b.dot(khat), 2);
        value += (3.0 / (16.0 * kPi)) * (self_a + self_b) * std::cosh(a.hyp);
    }
    return r.gamma0 * std::exp(-a.tt) * value;
}

}  // namespace

int AngularGrid::order_for(double x0) {
    return std::max(16, static_cast<int>(std::ceil(x0)) + 10);
}

AngularGrid AngularGrid::product_gauss(int order) {
    return product_gauss_about(order, Vec3::UnitZ());
}

AngularGrid AngularGrid::product_gauss_about(int order, const Vec3& axis) {
    if (order < 1) throw validation_error("AngularGrid: order must be >= 1");
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw validation_error("AngularGrid: axis must be a unit vector");
    std::vector<double> ct, wt;
    gauss_legendre(order, ct, wt);
    const int n_phi = 2 * order;
    const double w_phi = 2.0 * kPi / n_phi;

    const Vec3 u = axis.unitOrthogonal();
    const Vec3 v = axis.cross(u);

    AngularGrid g;
    g.order = order;
    g.nodes.reserve(static_cast<size_t>(order) * n_phi);
    g.weights.reserve(static_cast<size_t>(order) * n_phi);
    for (int i = 0; i < order; ++i) {
        const double c = ct[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = (j + 0.5) * w_phi;
            g.nodes.push_back(c * axis + s * (std::cos(phi) * u + std::sin(phi) * v));
            g.weights.push_back(wt[i] * w_phi);
        }
    }
    return g;
}

double angular_rate(const CouplingRates& rates, const DyadConfig& cfg,
                    double T_s, const Vec3& khat, EmissionMode mode,
                    AsymmetrySign sign) {
    check_pair(rates, cfg, "angular_rate");
    if (std::abs(khat.norm() - 1.0) > 1e-12)
        throw validation_error("angular_rate: khat must be a unit vector");
    return rate_at(rates, emission_args(rates, T_s), khat, mode, sign);
}

AngularRateSample angular_sample(const CouplingRates& rates,
                                 const DyadConfig& cfg, double T_s,
                                 const AngularGrid& grid, EmissionMode mode,
                                 AsymmetrySign sign) {
    check_pair(rates, cfg, "angular_sample");
    if (grid.nodes.empty() || grid.nodes.size() != grid.weights.size())
        throw validation_error("angular_sample: malformed grid");
    const EmissionArgs a = emission_args(rates, T_s);
    const double hbar_k0 = codata2018().hbar * rates.k0;

    AngularRateSample out;
    out.T = T_s;
    out.mode = mode;
    out.rate.resize(grid.nodes.size());
    double total = 0.0;
    Vec3 mom = Vec3::Zero();
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const double v = rate_at(rates, a, grid.nodes[i], mode, sign);
        out.rate[i] = v;
        total += grid.weights[i] * v;
        mom += grid.weights[i] * v * grid.nodes[i];
    }
    out.total_rate = total;
    out.momentum_rate = hbar_k0 * mom;
    return out;
}

Vec3 photon_momentum_rate(const CouplingRates& rates, const DyadConfig& cfg,
                          double T_s, const AngularGrid& grid,
                          double grid_rel_tol) {
    check_pair(rates, cfg, "photon_momentum_rate");
    const auto coarse = angular_sample(rates, cfg, T_s, grid,
                                       EmissionMode::consistent,
                                       AsymmetrySign::conserving);
    const AngularGrid fine =
        AngularGrid::product_gauss_about(grid.order + 10, rates.rhat);
    const auto refined = angular_sample(rates, cfg, T_s, fine,
                                        EmissionMode::consistent,
                                        AsymmetrySign::conserving);
    const double floor =
        1e-12 * codata2018().hbar * rates.k0 * rates.gamma0;
    const double scale = std::max(refined.momentum_rate.norm(), floor);
    const double rel = (coarse.momentum_rate - refined.momentum_rate).norm() / scale;
    if (rel > grid_rel_tol)
        throw numerical_error(
            "photon_momentum_rate: angular grid under-resolved (order " +
            std::to_string(grid.order) + ", k0R " + std::to_string(rates.x0) +
            ", refinement shift " + std::to_string(rel) + ")");
    return refined.momentum_rate;
}

}  // namespace dyad
