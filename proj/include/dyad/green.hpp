#pragma once
// Free-space dyadic Green tensor of the vector Helmholtz equation, in the
// dimensionless convention used throughout this library:
//
//   Gt(x, rhat) = -e^{ix} [ alpha/x + i*beta/x^2 - beta/x^3 ],   x = k|R| > 0,
//   alpha = I - rhat rhat^T,   beta = I - 3 rhat rhat^T.
//
// The SI tensor at real frequency is G = (k/4pi) * Gt(kR); all physical
// prefactors are applied in coupling.cpp, nothing in this header carries
// units. Useful facts encoded below:
//   - Im Gt(x -> 0) = -(2/3) I (finite); Re Gt diverges as the -beta/x^3
//     bracket term, i.e. +beta/x^3 after the global -e^{ix} sign.
//   - On the imaginary frequency axis omega = i*c*q the tensor is purely
//     real and exponentially decaying:
//       Gh(y) = -e^{-y} [ alpha/y + beta/y^2 + beta/y^3 ],  y = q|R|,
//     with SI value (q/4pi) * Gh(qR).
//
// Gradients are with respect to the dimensionless coordinate x*rhat and use
// the index convention grad[l](m,j) = d_l Gt_mj; the curl follows as
// (curl Gt)_ij = eps_{ilm} d_l Gt_mj.

#include "dyad/units.hpp"

#include <array>

namespace dyad {

struct ProjectorPair {
    Mat3 alpha;  // transverse projector I - rr
    Mat3 beta;   // near-field tensor I - 3rr
};

ProjectorPair projectors(const Vec3& rhat);

struct GreenEval {
    double x = 0.0;
    Vec3 rhat = Vec3::UnitZ();
    CMat3 G = CMat3::Zero();
    std::array<CMat3, 3> gradG{};  // gradG[l](m,j) = d_l Gt_mj
    CMat3 curlG = CMat3::Zero();   // eps_{ilm} d_l Gt_mj
    bool has_derivatives = false;
};

// Tensor only (gradG/curlG left zero).
GreenEval green(double x, const Vec3& rhat);

// Tensor plus analytic gradient and curl.
GreenEval green_full(double x, const Vec3& rhat);

// Scalar radial parts: Gt = f_i(x) * I + f_p(x) * rhat rhat^T and their
// exact x-derivatives. Exposed for tests and for the cancellation-free
// frequency-derivative combinations used in coupling.cpp.
struct RadialParts {
    complexd f_i, f_p;        // coefficients of I and of rhat rhat^T
    complexd df_i, df_p;      // d/dx of the above
    complexd three_f_plus_x_df_i;  // 3 f_i + x f_i' = -e^{ix} (i + 1/x), exact
    complexd three_f_plus_x_df_p;  // 3 f_p + x f_p' =  e^{ix} (i - 1/x), exact
};
RadialParts radial_parts(double x);

// Imaginary-frequency tensor Gh(y) and its gradient, purely real.
struct ImagGreenEval {
    double y = 0.0;
    Mat3 G = Mat3::Zero();
    std::array<Mat3, 3> gradG{};  // gradG[l](m,j) = d_l Gh_mj
};
ImagGreenEval green_imag(double y, const Vec3& rhat);

}  // namespace dyad
