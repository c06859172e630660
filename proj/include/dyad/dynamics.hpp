#pragma once
// Closed-form state evolution after sudden (pi-pulse) excitation of atom A:
// symmetric/antisymmetric amplitudes, bare-atom populations, emitted-photon
// probability, and the strong-drive preparation propagator.
//
// With T in seconds, Tt = Gamma0*T, and the dimensionless rates
// om = Omega_kR/Gamma0, ga = Gamma_kR/Gamma0, dom = d(Omega)/d(omega),
// dga = d(Gamma)/d(omega):
//
//   z   = (om*Tt + dga) + i (dom - ga*Tt)
//   a+  = -i e^{-i omega0 T - Tt/2} cos z      (A excited amplitude, global
//   b+  = -  e^{-i omega0 T - Tt/2} sin z       phase convention fixed here)
//
//   P_A     = e^{-Tt}/2 [ cosh(2 ga Tt - 2 dom) + cos(2 om Tt + 2 dga) ]
//   P_B     = e^{-Tt}/2 [ cosh(2 ga Tt - 2 dom) - cos(2 om Tt + 2 dga) ]
//   P_gamma = cosh(2 dom) - e^{-Tt} cosh(2 ga Tt - 2 dom)
//
// P_A + P_B + P_gamma == cosh(2 dom) identically; unitarity_sum is computed
// from the three population expressions (not short-circuited) so the
// identity is an actual check. P_A(0) = (cosh(2 dom) + cos(2 dga))/2 differs
// from 1 at second order in the frequency derivatives; that initial defect
// is reported as-is, never renormalized away.

#include "dyad/coupling.hpp"

namespace dyad {

struct AmplitudePair {
    complexd a_plus;  // amplitude of |A excited>
    complexd b_plus;  // amplitude of |B excited>
    double T = 0.0;   // [s]
};

struct PopulationSample {
    double T = 0.0;  // [s]
    double p_a = 0.0;
    double p_b = 0.0;
    double p_gamma = 0.0;
    double unitarity_sum = 0.0;  // p_a + p_b + p_gamma, as summed
};

AmplitudePair amplitudes(const CouplingRates& rates, double T_s);
PopulationSample populations(const CouplingRates& rates, double T_s);

// d(P_gamma)/dT [1/s]: total photon emission rate implied by the closed form.
double emission_rate_total(const CouplingRates& rates, double T_s);

// Strong-drive preparation propagator on one atom, {|ground>, |excited>}
// basis, drive Rabi frequency omega_L (resonant):
//   U(t) = [[cos(omega_L t/2),                    -i sin(omega_L t/2)],
//           [-i e^{-i omega0 t - gamma0 t/2} sin(omega_L t/2),
//                e^{-i omega0 t - gamma0 t/2} cos(omega_L t/2)]]
// The sudden-excitation limit assumes omega_L >> gamma0; a note is printed
// to stderr when omega_L < 100*gamma0.
Eigen::Matrix2cd rabi_propagator(double omega_L, double t_s, double omega0,
                                 double gamma0);

}  // namespace dyad
