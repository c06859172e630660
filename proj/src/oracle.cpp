#include "dyad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dyad {

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (n < 1) throw validation_error("gauss_legendre: order must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi-style initial guess for the i-th root of P_n.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: p1 = P_n(z), pp = P_n'(z).
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        // Center the odd node exactly.
        nodes[n / 2] = 0.0;
    }
}

double composite_gauss(const std::function<double(double)>& f, double a,
                       double b, int panels, int order) {
    if (panels < 1 || order < 1)
        throw validation_error("composite_gauss: panels and order must be >= 1");
    std::vector<double> xs, ws;
    gauss_legendre(order, xs, ws);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double acc = 0.0;
        for (int k = 0; k < order; ++k) acc += ws[k] * f(mid + 0.5 * h * xs[k]);
        total += 0.5 * h * acc;
    }
    return total;
}

DerivativeEstimate finite_difference(const std::function<double(double)>& f,
                                     double point, double step) {
    if (!(step > 0.0))
        throw validation_error("finite_difference: step must be positive");
    const auto central = [&](double h) {
        return (f(point + h) - f(point - h)) / (2.0 * h);
    };
    const double d1 = central(step);
    const double d2 = central(0.5 * step);
    DerivativeEstimate out;
    out.value = (4.0 * d2 - d1) / 3.0;
    out.error = std::abs(d2 - d1) / 3.0 +
                std::numeric_limits<double>::epsilon() * std::abs(out.value);
    return out;
}

DerivativeEstimate second_difference(const std::function<double(double)>& f,
                                     double point, double step) {
    if (!(step > 0.0))
        throw validation_error("second_difference: step must be positive");
    const auto central = [&](double h) {
        return (f(point + h) - 2.0 * f(point) + f(point - h)) / (h * h);
    };
    const double d1 = central(step);
    const double d2 = central(0.5 * step);
    DerivativeEstimate out;
    out.value = (4.0 * d2 - d1) / 3.0;
    out.error = std::abs(d2 - d1) / 3.0 +
                std::numeric_limits<double>::epsilon() * std::abs(out.value);
    return out;
}

SmallXSeries series_small_x() {
    // Expand Gt = -e^{ix}[alpha/x + i beta/x^2 - beta/x^3] about x = 0.
    // Writing Gt = a(x) alpha-part + ... in the (I, P = rr) basis:
    //   Im Gt = -(2/3) I + x^2 [ (2/15) I - (1/15) P ] + O(x^4),
    // and the Re part is dominated by the bracket's -beta/x^3 term, which
    // after the global -e^{ix} contributes +beta/x^3 to Re Gt.
    SmallXSeries s;
    s.im0_i = -2.0 / 3.0;
    s.im0_p = 0.0;
    s.im2_i = 2.0 / 15.0;
    s.im2_p = -1.0 / 15.0;
    s.re_x3_bracket_beta = -1.0;
    s.re_x3_net_beta = 1.0;
    return s;
}

OdeResult integrate_effective_pair(complexd coupling, double gamma0,
                                   const std::vector<double>& sample_times_s,
                                   double tol) {
    if (gamma0 <= 0.0)
        throw validation_error("integrate_effective_pair: gamma0 must be positive");
    if (!(tol > 0.0))
        throw validation_error("integrate_effective_pair: tol must be positive");
    std::vector<double> times = sample_times_s;
    std::sort(times.begin(), times.end());
    if (!times.empty() && times.front() < 0.0)
        throw validation_error("integrate_effective_pair: negative sample time");

    using State = Eigen::Vector2cd;
    const complexd minus_i(0.0, -1.0);
    const auto rhs = [&](const State& c) -> State {
        State d;
        d(0) = -0.5 * gamma0 * c(0) + minus_i * coupling * c(1);
        d(1) = -0.5 * gamma0 * c(1) + minus_i * coupling * c(0);
        return d;
    };

    // Dormand-Prince 5(4) tableau.
    static const double A[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static const double B5[7] = {35.0 / 384,      0.0,          500.0 / 1113,
                                 125.0 / 192,     -2187.0 / 6784, 11.0 / 84,
                                 0.0};
    static const double B4[7] = {5179.0 / 57600,  0.0,           7571.0 / 16695,
                                 393.0 / 640,     -92097.0 / 339200,
                                 187.0 / 2100,    1.0 / 40};

    OdeResult out;
    out.times = times;
    out.amplitudes.reserve(times.size());

    State c;
    c << complexd(1.0, 0.0), complexd(0.0, 0.0);
    double t = 0.0;
    // Natural step scale: the fastest rate in the problem.
    const double rate_scale =
        std::max({gamma0, std::abs(coupling), 1e-300});
    double h = 0.1 / rate_scale;
    const double hmin = 1e-14 / rate_scale;
    long guard = 0;

    auto step_to = [&](double t_target) {
        while (t < t_target) {
            if (++guard > 50'000'000)
                throw numerical_error("integrate_effective_pair: step budget exhausted");
            bool clipped = false;
            double hs = h;
            if (t + hs > t_target) {
                hs = t_target - t;
                clipped = true;
            }
            State k[7];
            k[0] = rhs(c);
            for (int s = 1; s < 7; ++s) {
                State y = c;
                for (int j = 0; j < s; ++j) y += hs * A[s][j] * k[j];
                k[s] = rhs(y);
            }
            State c5 = c, c4 = c;
            for (int s = 0; s < 7; ++s) {
                c5 += hs * B5[s] * k[s];
                c4 += hs * B4[s] * k[s];
            }
            const double sc = std::max(1.0, std::max(std::abs(c5(0)), std::abs(c5(1))));
            const double err = (c5 - c4).cwiseAbs().maxCoeff() / sc;
            if (err <= tol) {
                t += hs;
                c = c5;
                out.accepted_steps++;
                out.max_est_error = std::max(out.max_est_error, err);
            } else {
                out.rejected_steps++;
            }
            const double safety =
                0.9 * std::pow(std::max(err, 1e-300) / tol, -0.2);
            const double grow = std::clamp(safety, 0.2, 5.0);
            if (!clipped || err > tol) h = hs * grow;
            if (h < hmin)
                throw numerical_error(
                    "integrate_effective_pair: step size underflow");
        }
    };

    for (double ts : times) {
        step_to(ts);
        out.amplitudes.emplace_back(c(0), c(1));
    }
    return out;
}

}  // namespace dyad
