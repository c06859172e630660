#include "dyad/units.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dyad {

std::vector<std::string> DyadConfig::validate() const {
    std::vector<std::string> errors;
    auto finite3 = [](const Vec3& v) { return v.allFinite(); };
    if (!finite3(mu_a) || mu_a.norm() <= 0.0)
        errors.push_back("mu_a must be a finite nonzero vector");
    if (!finite3(mu_b) || mu_b.norm() <= 0.0)
        errors.push_back("mu_b must be a finite nonzero vector");
    if (mu_a.norm() > 0.0 && mu_b.norm() > 0.0 &&
        std::abs(mu_a.norm() - mu_b.norm()) > 1e-9 * mu_a.norm())
        errors.push_back("atoms must be identical: |mu_a| != |mu_b|");
    if (!std::isfinite(omega0) || omega0 <= 0.0)
        errors.push_back("omega0 must be positive");
    if (!std::isfinite(gamma0) || gamma0 <= 0.0)
        errors.push_back("gamma0 must be positive");
    if (!std::isfinite(mass) || mass <= 0.0)
        errors.push_back("mass must be positive");
    if (!finite3(r_vec) || r_vec.norm() <= 0.0)
        errors.push_back("r_vec must be a finite nonzero separation");
    return errors;
}

void DyadConfig::require_valid() const {
    auto errors = validate();
    if (errors.empty()) return;
    std::ostringstream os;
    os << "invalid configuration:";
    for (const auto& e : errors) os << " [" << e << "]";
    throw validation_error(os.str());
}

double gamma0_rate(double omega0, double mu_magnitude) {
    if (omega0 <= 0.0 || mu_magnitude <= 0.0)
        throw validation_error("gamma0_rate: omega0 and |mu| must be positive");
    const auto k = codata2018();
    const double k0 = omega0 / k.c;
    return k0 * k0 * k0 * mu_magnitude * mu_magnitude /
           (3.0 * std::numbers::pi * k.eps0 * k.hbar);
}

DyadConfig rydberg_pair(int n, double mass_kg, double x0,
                        std::optional<double> lambda0_override_m) {
    if (n < 2) throw validation_error("rydberg_pair: n must be >= 2");
    if (mass_kg <= 0.0) throw validation_error("rydberg_pair: mass must be positive");
    if (x0 <= 0.0) throw validation_error("rydberg_pair: x0 must be positive");
    const auto k = codata2018();

    const double mu = k.e_charge * k.a0 * double(n) * double(n);
    double omega0;
    if (lambda0_override_m) {
        if (*lambda0_override_m <= 0.0)
            throw validation_error("rydberg_pair: lambda0 override must be positive");
        omega0 = 2.0 * std::numbers::pi * k.c / *lambda0_override_m;
    } else {
        // Adjacent-level spacing of a hydrogen-like circular state,
        // E_{n-1} - E_n ~ 2 E0 / n^3.
        omega0 = 2.0 * k.E0 / (k.hbar * double(n) * double(n) * double(n));
    }

    DyadConfig cfg;
    cfg.mu_a = mu * Vec3::UnitX();
    cfg.mu_b = mu * Vec3::UnitX();
    cfg.omega0 = omega0;
    cfg.gamma0 = gamma0_rate(omega0, mu);
    cfg.mass = mass_kg;
    cfg.r_vec = (x0 / cfg.k0()) * Vec3::UnitZ();
    cfg.require_valid();
    return cfg;
}

}  // namespace dyad
