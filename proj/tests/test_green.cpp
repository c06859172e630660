#include <doctest.h>

#include "dyad/emission.hpp"
#include "dyad/green.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace dyad;

namespace {

Vec3 random_unit(std::mt19937& rng) {
    std::normal_distribution<double> g;
    Vec3 v(g(rng), g(rng), g(rng));
    while (v.norm() < 1e-6) v = Vec3(g(rng), g(rng), g(rng));
    return v.normalized();
}

// Direct textbook evaluation -e^{ix}[alpha/x + i beta/x^2 - beta/x^3]; fine
// at moderate x, catastrophically cancelling in its imaginary part at small
// x. Used to pin the production evaluation where both are trustworthy.
CMat3 naive_green(double x, const Vec3& rhat) {
    const auto [alpha, beta] = projectors(rhat);
    const complexd eix = std::exp(complexd(0.0, x));
    const CMat3 bracket = alpha.cast<complexd>() / x +
                          complexd(0.0, 1.0) * beta.cast<complexd>() / (x * x) -
                          beta.cast<complexd>() / (x * x * x);
    return -eix * bracket;
}

}  // namespace

TEST_CASE("projectors have the defining algebraic properties") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 20; ++i) {
        const Vec3 r = random_unit(rng);
        const auto [alpha, beta] = projectors(r);
        CHECK((alpha * r).norm() < 1e-14);                       // kills the axis
        CHECK((alpha * alpha - alpha).norm() < 1e-14);           // idempotent
        CHECK(alpha.trace() == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(beta.trace() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK((beta - (alpha - 2.0 * r * r.transpose())).norm() < 1e-14);
    }
}

TEST_CASE("tensor is symmetric and even in rhat") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Vec3 r = random_unit(rng);
        const double x = std::exp(std::uniform_real_distribution<double>(
            std::log(1e-3), std::log(30.0))(rng));
        const CMat3 G = green(x, r).G;
        CHECK((G - G.transpose()).norm() < 1e-12 * G.norm());
        CHECK((G - green(x, -r).G).norm() < 1e-13 * G.norm());
    }
}

TEST_CASE("production evaluation matches the direct formula at moderate x") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Vec3 r = random_unit(rng);
        const double x = std::uniform_real_distribution<double>(0.6, 25.0)(rng);
        const CMat3 G = green(x, r).G;
        CHECK((G - naive_green(x, r)).norm() < 1e-13 * G.norm());
    }
}

TEST_CASE("small-x limit of the imaginary part is finite and quadratic") {
    const Vec3 r = Vec3::UnitZ();
    const Mat3 P = r * r.transpose();
    for (double x : {1e-4, 1e-3, 1e-2}) {
        const CMat3 G = green(x, r).G;
        const Mat3 im = G.imag();
        // Leading term -(2/3) I, correction x^2 [(2/15) I - (1/15) P].
        const Mat3 lead = -(2.0 / 3.0) * Mat3::Identity();
        const Mat3 quad = (2.0 / 15.0) * Mat3::Identity() - (1.0 / 15.0) * P;
        CHECK((im - lead).norm() < 0.5 * x * x);
        // Next order is x^4 [-(1/140) I + (1/210) P], Frobenius norm 0.0104.
        CHECK((im - lead - x * x * quad).norm() < 2e-2 * x * x * x * x + 1e-15);
        // The stable path must hold this down to x = 1e-4, where the naive
        // formula has already lost everything to cancellation.
    }
    // And the real part diverges as +beta/x^3 (sign after the global -e^{ix}).
    const double x = 1e-4;
    const Mat3 re3 = green(x, r).G.real() * (x * x * x);
    const Mat3 beta = Mat3::Identity() - 3.0 * P;
    CHECK((re3 - beta).norm() < 1e-6);
}

TEST_CASE("far field needs both radiative terms") {
    std::mt19937 rng(3);
    const Vec3 r = random_unit(rng);
    const double x = 1e4;
    const auto [alpha, beta] = projectors(r);
    const complexd eix = std::exp(complexd(0.0, x));
    const CMat3 two_term =
        -eix * (alpha.cast<complexd>() / x +
                complexd(0.0, 1.0) * beta.cast<complexd>() / (x * x));
    const CMat3 one_term = -eix * (alpha.cast<complexd>() / x);
    const CMat3 G = green(x, r).G;
    CHECK((G - two_term).norm() / G.norm() < 1e-7);   // 1/x^3 left over
    const double alpha_only = (G - one_term).norm() / G.norm();
    CHECK(alpha_only > 1e-5);  // dropping the i beta/x^2 term is visible
    CHECK(alpha_only < 1e-3);
}

TEST_CASE("analytic gradient and curl match finite differences") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ux(0.4, 12.0);
    for (int trial = 0; trial < 25; ++trial) {
        const Vec3 rhat = random_unit(rng);
        const double x = ux(rng);
        const Vec3 p0 = x * rhat;
        const Vec3 d = random_unit(rng);
        const GreenEval ge = green_full(x, rhat);

        // Directional derivative of the whole tensor along d, Richardson
        // extrapolated central difference.
        auto Gat = [&](double t) {
            const Vec3 p = p0 + t * d;
            return green(p.norm(), p.normalized()).G;
        };
        const double h = 1e-4 * std::max(1.0, x);
        const CMat3 d1 = (Gat(h) - Gat(-h)) / (2.0 * h);
        const CMat3 d2 = (Gat(h / 2.0) - Gat(-h / 2.0)) / h;
        const CMat3 fd = (4.0 * d2 - d1) / 3.0;

        CMat3 analytic = CMat3::Zero();
        for (int l = 0; l < 3; ++l) analytic += d[l] * ge.gradG[l];
        CHECK((analytic - fd).norm() < 1e-8 * std::max(1.0, fd.norm()));

        // Curl re-contracted from the same gradients.
        CMat3 curl = CMat3::Zero();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                // eps_{ilm} d_l G_mj
                const int l1 = (i + 1) % 3, m1 = (i + 2) % 3;
                curl(i, j) = ge.gradG[l1](m1, j) - ge.gradG[m1](l1, j);
            }
        CHECK((curl - ge.curlG).norm() < 1e-12 * std::max(1.0, curl.norm()));
    }
}

TEST_CASE("radial parts reproduce the tensor and their exact combinations") {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        const Vec3 r = random_unit(rng);
        const double x = std::uniform_real_distribution<double>(0.8, 20.0)(rng);
        const auto rp = radial_parts(x);
        const CMat3 rebuilt =
            rp.f_i * CMat3::Identity() +
            rp.f_p * (r * r.transpose()).cast<complexd>();
        CHECK((rebuilt - green(x, r).G).norm() < 1e-14 * rebuilt.norm());
        // The stored cancellation-free combinations equal 3f + x f' formed
        // from the separately computed pieces (catches any sign slip).
        CHECK(std::abs(3.0 * rp.f_i + x * rp.df_i - rp.three_f_plus_x_df_i) < 1e-12);
        CHECK(std::abs(3.0 * rp.f_p + x * rp.df_p - rp.three_f_plus_x_df_p) < 1e-12);
    }
}

TEST_CASE("imaginary-axis tensor is the analytic continuation") {
    // Gh(y) = i * Gt(iy): evaluate the complex-x formula at x = iy and
    // compare; the result must be purely real.
    std::mt19937 rng(21);
    for (double y : {0.3, 1.0, 2.7, 8.0}) {
        const Vec3 r = random_unit(rng);
        const auto [alpha, beta] = projectors(r);
        const complexd x(0.0, y);
        const complexd ex = std::exp(complexd(0.0, 1.0) * x);
        const CMat3 Gt = -ex * (alpha.cast<complexd>() / x +
                                complexd(0.0, 1.0) * beta.cast<complexd>() / (x * x) -
                                beta.cast<complexd>() / (x * x * x));
        const CMat3 continued = complexd(0.0, 1.0) * Gt;
        const Mat3 Gh = green_imag(y, r).G;
        CHECK(continued.imag().norm() < 1e-14 * continued.real().norm());
        CHECK((Gh - continued.real()).norm() < 1e-13 * Gh.norm());

        // Gradient against finite differences in y (radial direction only;
        // the transverse structure is shared with the real-axis code path).
        const double h = 1e-5 * std::max(1.0, y);
        const Mat3 fd =
            (green_imag(y + h, r).G - green_imag(y - h, r).G) / (2.0 * h);
        Mat3 radial = Mat3::Zero();
        const auto ig = green_imag(y, r);
        for (int l = 0; l < 3; ++l) radial += r[l] * ig.gradG[l];
        CHECK((radial - fd).norm() < 1e-8 * std::max(1.0, fd.norm()));
    }
}

TEST_CASE("plane-wave sphere integral reproduces the imaginary part") {
    // integral dTheta (I - khat khat) e^{i x khat.rhat} = -4pi Im Gt(x, rhat),
    // the identity that ties emission into all 4pi directions back to the
    // pair decay rates. Strong independent oracle for Im Gt.
    std::mt19937 rng(31);
    const Vec3 r = random_unit(rng);
    for (double x : {0.3, 1.0, 2.5, 7.0}) {
        const AngularGrid grid = AngularGrid::product_gauss(AngularGrid::order_for(x));
        Mat3 acc = Mat3::Zero();
        for (size_t k = 0; k < grid.nodes.size(); ++k) {
            const Vec3& n = grid.nodes[k];
            const Mat3 trans = Mat3::Identity() - n * n.transpose();
            acc += grid.weights[k] * std::cos(x * n.dot(r)) * trans;
            // sin part integrates to zero by parity; omitted.
        }
        const Mat3 target = -4.0 * std::numbers::pi * green(x, r).G.imag();
        CHECK((acc - target).norm() < 1e-8 * target.norm());
    }
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(green(0.0, Vec3::UnitZ()), validation_error);
    CHECK_THROWS_AS(green(-1.0, Vec3::UnitZ()), validation_error);
    CHECK_THROWS_AS(green(std::nan(""), Vec3::UnitZ()), validation_error);
    CHECK_THROWS_AS(green(1.0, Vec3::Zero()), validation_error);
    CHECK_THROWS_AS(radial_parts(0.0), validation_error);
    CHECK_THROWS_AS(green_imag(0.0, Vec3::UnitZ()), validation_error);
}
