#pragma once
// Independent verification numerics: everything here deliberately avoids the
// closed forms it is used to check.
//  - adaptive Dormand-Prince 5(4) integration of the effective two-level
//    non-Hermitian system
//  - Richardson-extrapolated central finite differences
//  - small-x Taylor data for the Green tensor
//  - Gauss-Legendre node generation (shared by the spherical product grid
//    and the off-resonant quadrature)

#include "dyad/units.hpp"

#include <functional>
#include <vector>

namespace dyad {

// Solution record for  d/dt [cA, cB] = -(Gamma0/2) I [cA,cB]
//                                      - i Omega~ [[0,1],[1,0]] [cA,cB],
// cA(0)=1, cB(0)=0, in the frame rotating at omega0. Omega~ is the complex
// coupling Omega_kR - i Gamma_kR (with this normalization the symmetric and
// antisymmetric amplitudes decay at Gamma0/2 +- Gamma_kR, i.e. population
// rates Gamma0 +- 2 Gamma_kR, the correct Dicke pair limits); the integrator
// knows nothing about closed forms.
struct OdeResult {
    std::vector<double> times;  // [s]
    std::vector<std::pair<complexd, complexd>> amplitudes;  // (cA, cB)
    long accepted_steps = 0;
    long rejected_steps = 0;
    double max_est_error = 0.0;  // max embedded local error estimate
};

OdeResult integrate_effective_pair(complexd coupling, double gamma0,
                                   const std::vector<double>& sample_times_s,
                                   double tol = 1e-12);

struct DerivativeEstimate {
    double value = 0.0;
    double error = 0.0;  // Richardson error estimate
};

// Central difference with one Richardson extrapolation step:
// D(h), D(h/2) -> (4 D(h/2) - D(h))/3, error ~ |D(h/2) - D(h)|/3.
DerivativeEstimate finite_difference(const std::function<double(double)>& f,
                                     double point, double step);

// Second derivative, central 5-point with Richardson (h and h/2).
DerivativeEstimate second_difference(const std::function<double(double)>& f,
                                     double point, double step);

// Taylor data for the dimensionless Green tensor about x = 0, written as
// coefficients of I and of rhat rhat^T per power of x:
//   Im Gt = (im0_i I + im0_p P) + x^2 (im2_i I + im2_p P) + O(x^4)
// and the leading Re divergence both as the bracket coefficient (the
// -beta/x^3 term of [alpha/x + i beta/x^2 - beta/x^3]) and as the net
// coefficient of beta/x^3 in Re Gt after the global -e^{ix} sign.
struct SmallXSeries {
    double im0_i = 0.0, im0_p = 0.0;  // -(2/3), 0
    double im2_i = 0.0, im2_p = 0.0;  // 2/15, -1/15
    double re_x3_bracket_beta = 0.0;  // -1
    double re_x3_net_beta = 0.0;      // +1
};
SmallXSeries series_small_x();

// Gauss-Legendre nodes/weights on [-1, 1], generated by Newton iteration on
// the Legendre recurrence. Exact (to roundoff) for polynomials of degree
// 2n-1; deterministic.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Composite Gauss-Legendre integral of f over [a, b] with `panels` equal
// panels of fixed order (default 16).
double composite_gauss(const std::function<double(double)>& f, double a,
                       double b, int panels, int order = 16);

}  // namespace dyad
