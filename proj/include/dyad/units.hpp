#pragma once
// Physical constants, unit conversions, and the problem configuration.
//
// Everything at the public API boundary is SI. Internally the closed forms
// are evaluated in natural units anchored at the pair (Gamma0, k0) with
// hbar = 1: time <-> 1/Gamma0, length <-> 1/k0, frequency <-> Gamma0,
// force <-> hbar*k0*Gamma0, displacement <-> 1/k0. UnitSystem owns those
// round trips so every conversion factor lives in one place.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace dyad {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;
using complexd = std::complex<double>;

// Thrown on malformed user input (bad config, invalid argument values).
// The CLI maps this family to exit code 1.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical procedure cannot reach its accuracy target
// (quadrature non-convergence, under-resolved angular grid, step underflow).
// The CLI maps this family to exit code 2.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CODATA 2018 values, SI.
struct Constants {
    double hbar;      // reduced Planck constant [J s]
    double c;         // speed of light [m/s]
    double eps0;      // vacuum permittivity [F/m]
    double e_charge;  // elementary charge [C]
    double a0;        // Bohr radius [m]
    double E0;        // hydrogen binding energy, 13.605693122994 eV [J]
    double amu;       // atomic mass unit [kg]
};

constexpr Constants codata2018() {
    return Constants{
        1.054571817e-34,      // hbar
        299792458.0,          // c (exact)
        8.8541878128e-12,     // eps0
        1.602176634e-19,      // e (exact)
        5.29177210903e-11,    // a0
        2.1798723611035e-18,  // E0
        1.66053906660e-27,    // amu
    };
}

// Full description of one two-atom problem: two identical two-level atoms
// with transition dipoles mu_a, mu_b [C m], shared transition frequency
// omega0 [rad/s], single-atom decay rate gamma0 [1/s], atomic mass [kg],
// and separation vector r_vec [m] pointing from atom A to atom B.
struct DyadConfig {
    Vec3 mu_a = Vec3::Zero();
    Vec3 mu_b = Vec3::Zero();
    double omega0 = 0.0;
    double gamma0 = 0.0;
    double mass = 0.0;
    Vec3 r_vec = Vec3::Zero();

    double k0() const { return omega0 / codata2018().c; }
    double x0() const { return k0() * r_vec.norm(); }

    // Returns every violated constraint (empty == valid).
    std::vector<std::string> validate() const;
    // Throws validation_error listing every violation.
    void require_valid() const;
};

// Conversions between SI and the (Gamma0, k0, hbar=1) internal system.
struct UnitSystem {
    double gamma0;  // [1/s]
    double k0;      // [1/m]

    double time_to_internal(double t_s) const { return t_s * gamma0; }
    double time_to_si(double t_int) const { return t_int / gamma0; }
    double length_to_internal(double r_m) const { return r_m * k0; }
    double length_to_si(double x_int) const { return x_int / k0; }
    double frequency_to_internal(double w_si) const { return w_si / gamma0; }
    double frequency_to_si(double w_int) const { return w_int * gamma0; }
    double force_to_si(double f_int) const {
        return f_int * codata2018().hbar * k0 * gamma0;
    }
    double force_to_internal(double f_si) const {
        return f_si / (codata2018().hbar * k0 * gamma0);
    }
    double displacement_to_si(double s_int) const { return s_int / k0; }
    double displacement_to_internal(double s_m) const { return s_m * k0; }
};

// Spontaneous decay rate of one atom, gamma0 = k0^3 |mu|^2 / (3 pi eps0 hbar),
// from the transition frequency and dipole magnitude.
double gamma0_rate(double omega0, double mu_magnitude);

// Builds a circular-Rydberg-like pair: |mu| = e * a0 * n^2, dipoles
// perpendicular to the separation axis and parallel to each other,
// omega0 from lambda0_override if given, else from the adjacent-level
// spacing 2*E0/(hbar*n^3); gamma0 from the closed form above.
// Separation is chosen so that k0*R = x0.
DyadConfig rydberg_pair(int n, double mass_kg, double x0,
                        std::optional<double> lambda0_override_m = {});

}  // namespace dyad
