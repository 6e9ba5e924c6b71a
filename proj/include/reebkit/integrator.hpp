#pragma once

// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince) with optional
// post-step projection and a per-step observer for event detection.

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <limits>

namespace reebkit {

using State = Eigen::VectorXd;

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-10;
    double h_init = 1e-3;
    double h_max = std::numeric_limits<double>::infinity();
    double h_min = 1e-14;
    std::size_t max_steps = 5'000'000;
};

using OdeRhs = std::function<void(double t, const State& x, State& dxdt)>;
using OdeProjector = std::function<void(State& x)>;
/// Called after each accepted step; returning true stops the integration.
using StepObserver = std::function<bool(double t0, const State& x0, double t1, const State& x1)>;

struct OdeResult {
    double t = 0;
    State x;
    std::size_t steps = 0;
    bool stopped = false;
    /// Last accepted step size, usable as h_init for a continuation.
    double h_last = 0;
};

/// Integrate from t0 to t1 (t1 < t0 integrates backward). Throws
/// IntegrationError when the step size underflows or max_steps is hit.
OdeResult integrate(const OdeRhs& rhs, State x0, double t0, double t1, const OdeOptions& opt = {},
                    const OdeProjector& project = {}, const StepObserver& observe = {});

} // namespace reebkit
