#include "dyad/green.hpp"

#include <cmath>

namespace dyad {

namespace {

void check_args(double x, const Vec3& rhat, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw validation_error(std::string(who) + ": require x > 0");
    if (std::abs(rhat.norm() - 1.0) > 1e-12)
        throw validation_error(std::string(who) + ": rhat must be a unit vector");
}

// d rhat_m / d x_l = (delta_lm - rhat_l rhat_m) / x  (dimensionless coords).
// Tensor derivative of Gt = f_i I + f_p rhat rhat^T:
//   d_l Gt_mj = rhat_l (f_i' delta_mj + f_p' rhat_m rhat_j)
//             + (f_p/x) [ (delta_lm - rhat_l rhat_m) rhat_j
//                        + rhat_m (delta_lj - rhat_l rhat_j) ].
template <typename Scalar>
std::array<Eigen::Matrix<Scalar, 3, 3>, 3> tensor_gradient(
    double x, const Vec3& rhat, Scalar f_p, Scalar df_i, Scalar df_p) {
    std::array<Eigen::Matrix<Scalar, 3, 3>, 3> grad;
    for (int l = 0; l < 3; ++l) {
        Eigen::Matrix<Scalar, 3, 3>& g = grad[l];
        for (int m = 0; m < 3; ++m) {
            for (int j = 0; j < 3; ++j) {
                const double dlm = (l == m) ? 1.0 : 0.0;
                const double dlj = (l == j) ? 1.0 : 0.0;
                const double dmj = (m == j) ? 1.0 : 0.0;
                Scalar v = rhat[l] * (df_i * dmj + df_p * rhat[m] * rhat[j]);
                v += (f_p / x) * ((dlm - rhat[l] * rhat[m]) * rhat[j] +
                                  rhat[m] * (dlj - rhat[l] * rhat[j]));
                g(m, j) = v;
            }
        }
    }
    return grad;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> tensor_curl(
    const std::array<Eigen::Matrix<Scalar, 3, 3>, 3>& grad) {
    // (curl M)_ij = eps_{ilm} d_l M_mj
    Eigen::Matrix<Scalar, 3, 3> c;
    for (int j = 0; j < 3; ++j) {
        c(0, j) = grad[1](2, j) - grad[2](1, j);
        c(1, j) = grad[2](0, j) - grad[0](2, j);
        c(2, j) = grad[0](1, j) - grad[1](0, j);
    }
    return c;
}

}  // namespace

ProjectorPair projectors(const Vec3& rhat) {
    if (std::abs(rhat.norm() - 1.0) > 1e-12)
        throw validation_error("projectors: rhat must be a unit vector");
    const Mat3 rr = rhat * rhat.transpose();
    return {Mat3::Identity() - rr, Mat3::Identity() - 3.0 * rr};
}

namespace {

// (x cos x - sin x)/x^3, stable at small x where the numerator cancels to
// O(x^3): series sum_{m>=1} (-1)^m (2m) x^{2m-2} / (2m+1)!.
double xcos_minus_sin_over_x3(double x) {
    if (x >= 0.5)
        return (x * std::cos(x) - std::sin(x)) / (x * x * x);
    const double x2 = x * x;
    double sum = 0.0;
    double fact = 6.0;  // (2m+1)! starting at m=1
    double xpow = 1.0;  // x^{2m-2}
    double sign = -1.0;
    for (int m = 1; m <= 12; ++m) {
        const double term = sign * (2.0 * m) * xpow / fact;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        sign = -sign;
        xpow *= x2;
        fact *= (2.0 * m + 2.0) * (2.0 * m + 3.0);
    }
    return sum;
}

}  // namespace

RadialParts radial_parts(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw validation_error("radial_parts: require x > 0");
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double ix1 = 1.0 / x;
    const double ix2 = ix1 * ix1;
    const double ix3 = ix2 * ix1;
    const double ix4 = ix3 * ix1;

    // Real parts directly (their small-x divergence is genuine); imaginary
    // parts through sin(x)/x and c(x) = (x cos x - sin x)/x^3, which stay
    // cancellation-free down to x -> 0 where Im f_i -> -2/3, Im f_p -> 0.
    const double sxox = sx * ix1;
    const double c = xcos_minus_sin_over_x3(x);

    RadialParts r;
    r.f_i = complexd(-cx * ix1 + cx * ix3 + sx * ix2, -sxox - c);
    r.f_p = complexd(cx * (ix1 - 3.0 * ix3) - 3.0 * sx * ix2, sxox + 3.0 * c);

    // f_i' = -e^{ix}(i h + h'), h = 1/x + i/x^2 - 1/x^3:
    //   i h + h' = (-2/x^2 + 3/x^4) + i (1/x - 3/x^3);
    // f_p' = e^{ix}(i p + p'), p = 1/x + 3i/x^2 - 3/x^3:
    //   i p + p' = (-4/x^2 + 9/x^4) + i (1/x - 9/x^3).
    // Imaginary parts again via the stable kernels, using
    //   d/dx [sin x / x] = x c(x)  and  c'(x) = -Im f_p / x.
    const double qi_r = -2.0 * ix2 + 3.0 * ix4;
    const double qi_i = ix1 - 3.0 * ix3;
    const double qp_r = -4.0 * ix2 + 9.0 * ix4;
    const double qp_i = ix1 - 9.0 * ix3;
    const double im_f_p = r.f_p.imag();
    r.df_i = complexd(-(cx * qi_r - sx * qi_i), -x * c + im_f_p * ix1);
    r.df_p = complexd(cx * qp_r - sx * qp_i, x * c - 3.0 * im_f_p * ix1);

    // Cancellation-free frequency-derivative combinations (the 1/x^3
    // statics drop analytically):
    //   3 f_i + x f_i' = -e^{ix} (i + 1/x),  3 f_p + x f_p' = e^{ix} (i - 1/x).
    r.three_f_plus_x_df_i = complexd(-cx * ix1 + sx, -(cx + sx * ix1));
    r.three_f_plus_x_df_p = complexd(-cx * ix1 - sx, cx - sx * ix1);
    return r;
}

GreenEval green(double x, const Vec3& rhat) {
    check_args(x, rhat, "green");
    const RadialParts r = radial_parts(x);
    GreenEval out;
    out.x = x;
    out.rhat = rhat;
    const Mat3 pp = rhat * rhat.transpose();
    out.G = r.f_i * Mat3::Identity().cast<complexd>() + r.f_p * pp.cast<complexd>();
    return out;
}

GreenEval green_full(double x, const Vec3& rhat) {
    GreenEval out = green(x, rhat);
    const RadialParts r = radial_parts(x);
    out.gradG = tensor_gradient<complexd>(x, rhat, r.f_p, r.df_i, r.df_p);
    out.curlG = tensor_curl<complexd>(out.gradG);
    out.has_derivatives = true;
    return out;
}

ImagGreenEval green_imag(double y, const Vec3& rhat) {
    check_args(y, rhat, "green_imag");
    const double ey = std::exp(-y);
    const double iy1 = 1.0 / y;
    const double iy2 = iy1 * iy1;
    const double iy3 = iy2 * iy1;
    const double iy4 = iy3 * iy1;
    // Gh = g_i I + g_p rhat rhat^T with
    //   g_i = -e^{-y} (1/y + 1/y^2 + 1/y^3),
    //   g_p =  e^{-y} (1/y + 3/y^2 + 3/y^3).
    const double g_i = -ey * (iy1 + iy2 + iy3);
    const double g_p = ey * (iy1 + 3.0 * iy2 + 3.0 * iy3);
    const double dg_i = ey * (iy1 + iy2 + iy3) + (-ey) * (-iy2 - 2.0 * iy3 - 3.0 * iy4);
    const double dg_p = -ey * (iy1 + 3.0 * iy2 + 3.0 * iy3) +
                        ey * (-iy2 - 6.0 * iy3 - 9.0 * iy4);

    ImagGreenEval out;
    out.y = y;
    const Mat3 pp = rhat * rhat.transpose();
    out.G = g_i * Mat3::Identity() + g_p * pp;
    out.gradG = tensor_gradient<double>(y, rhat, g_p, dg_i, dg_p);
    return out;
}

}  // namespace dyad
