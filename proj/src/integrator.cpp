#include "reebkit/integrator.hpp"

#include "reebkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace reebkit {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

OdeResult integrate(const OdeRhs& rhs, State x0, double t0, double t1, const OdeOptions& opt,
                    const OdeProjector& project, const StepObserver& observe) {
    OdeResult res;
    res.t = t0;
    res.x = std::move(x0);
    if (t1 == t0) return res;

    const double dir = t1 > t0 ? 1.0 : -1.0;
    const Eigen::Index n = res.x.size();
    State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y5(n), err(n);

    double h = std::min({opt.h_init, opt.h_max, std::abs(t1 - t0)});
    rhs(res.t, res.x, k1);

    while (dir * (t1 - res.t) > 0) {
        if (res.steps >= opt.max_steps) {
            std::ostringstream os;
            os << "integration exceeded " << opt.max_steps << " steps at t=" << res.t;
            throw IntegrationError(os.str());
        }
        bool last = false;
        if (h >= std::abs(t1 - res.t)) {
            h = std::abs(t1 - res.t);
            last = true;
        }
        const double hs = dir * h;
        const double t = res.t;
        const State& y = res.x;

        tmp = y + hs * (a21 * k1);
        rhs(t + c2 * hs, tmp, k2);
        tmp = y + hs * (a31 * k1 + a32 * k2);
        rhs(t + c3 * hs, tmp, k3);
        tmp = y + hs * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * hs, tmp, k4);
        tmp = y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * hs, tmp, k5);
        tmp = y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + hs, tmp, k6);
        y5 = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + hs, y5, k7);
        err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double enorm = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            enorm = std::max(enorm, std::abs(err[i]) / sc);
        }

        if (enorm <= 1.0) {
            const double t_new = last ? t1 : t + hs;
            if (project) project(y5);
            State x_prev = std::move(res.x);
            res.x = y5;
            res.t = t_new;
            res.h_last = h;
            ++res.steps;
            if (project) rhs(res.t, res.x, k1);
            else k1 = k7;
            if (observe && observe(t, x_prev, res.t, res.x)) {
                res.stopped = true;
                return res;
            }
            const double fac = enorm == 0 ? 5.0 : std::clamp(0.9 * std::pow(enorm, -0.2), 0.2, 5.0);
            h = std::min(h * fac, opt.h_max);
        } else {
            h *= std::clamp(0.9 * std::pow(enorm, -0.25), 0.1, 0.9);
            if (h < opt.h_min) {
                std::ostringstream os;
                os << "step size underflow (h=" << h << ") at t=" << res.t;
                throw IntegrationError(os.str());
            }
        }
    }
    return res;
}

} // namespace reebkit
