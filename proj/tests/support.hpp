#pragma once

// Random smooth generator loops and derived paths shared by the unit tests
// and the acceptance runner.

#include "reebkit/errors.hpp"
#include "reebkit/index.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace reebkit::testing {

constexpr double kTwoPi = 2 * std::numbers::pi;

inline Mat2 sym(double a, double b, double c) {
    Mat2 m;
    m << a, b, b, c;
    return m;
}

/// S(t) = S0 + sum_{k=1,2} (A_k cos 2 pi k t + B_k sin 2 pi k t).
struct TrigLoop {
    Mat2 s0 = Mat2::Zero();
    std::array<Mat2, 2> a{Mat2::Zero(), Mat2::Zero()};
    std::array<Mat2, 2> b{Mat2::Zero(), Mat2::Zero()};

    Mat2 operator()(double t) const {
        Mat2 out = s0;
        for (int k = 0; k < 2; ++k) {
            const double arg = kTwoPi * (k + 1) * t;
            out += std::cos(arg) * a[k] + std::sin(arg) * b[k];
        }
        return out;
    }

    static TrigLoop random(std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u(-5, 5);
        auto draw = [&] { return sym(u(rng), u(rng), u(rng)); };
        TrigLoop l;
        l.s0 = draw();
        for (int k = 0; k < 2; ++k) {
            l.a[k] = draw();
            l.b[k] = draw();
        }
        return l;
    }
};

/// Fundamental solution of phi' = J0 S phi evaluated at increasing times.
inline std::vector<Mat2> solve_at(const LoopFn& s, const std::vector<double>& times, double h = 1.0 / 4096) {
    const Mat2 j = j0();
    auto rhs = [&](double t, const Mat2& x) -> Mat2 { return j * s(t) * x; };
    std::vector<Mat2> out;
    out.reserve(times.size());
    Mat2 phi = Mat2::Identity();
    double t = 0;
    for (double target : times) {
        while (t < target) {
            const double dt = std::min(h, target - t);
            const Mat2 k1 = rhs(t, phi);
            const Mat2 k2 = rhs(t + dt / 2, phi + dt / 2 * k1);
            const Mat2 k3 = rhs(t + dt / 2, phi + dt / 2 * k2);
            const Mat2 k4 = rhs(t + dt, phi + dt * k3);
            phi += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
            t += dt;
        }
        out.push_back(phi);
    }
    return out;
}

/// Generator of t -> R(2 pi t) phi(t), given the generator of phi.
inline LoopFn maslov_shifted(const LoopFn& s) {
    return [s](double t) {
        const Mat2 r = rotation(kTwoPi * t);
        return Mat2(kTwoPi * Mat2::Identity() + r * s(t) * r.transpose());
    };
}

/// Generator -S(1 - t) of psi(t) = phi(1 - t) phi(1)^{-1}. psi ends at
/// phi(1)^{-1} and is homotopic with fixed endpoints to t -> phi(t)^{-1}
/// (both are images of edges of the square (a, b) -> phi(a) phi(b)^{-1}).
inline LoopFn reversed_inverse(const LoopFn& s) {
    return [s](double t) { return Mat2(-s(1 - t)); };
}

/// Geometric index of the pointwise inverse t -> phi(t)^{-1} of the path
/// generated by s. w = phi^{-1} solves w' = -w J0 S; the phase of w(t) zeta is
/// tracked on a base grid and intervals with large phase steps are subdivided
/// by re-integrating from the stored left endpoint, so the sharp turns of
/// strongly hyperbolic inverses are resolved.
class InverseTracker {
public:
    explicit InverseTracker(LoopFn s, int n = 2048) : s_(std::move(s)), n_(n), w_(n + 1) {
        w_[0] = Mat2::Identity();
        for (int i = 0; i < n_; ++i) w_[i + 1] = advance(w_[i], t(i), t(i + 1), 2);
    }

    double delta(const Vec2& zeta) const {
        double total = 0;
        for (int i = 0; i < n_; ++i) total += turn(w_[i], w_[i + 1], t(i), t(i + 1), zeta, 0);
        return total / kTwoPi;
    }

    int mu() const {
        constexpr int dirs = 720;
        double lo = 1e300, hi = -1e300;
        int jlo = 0, jhi = 0;
        for (int j = 0; j < dirs; ++j) {
            const double d = at(std::numbers::pi * j / dirs);
            if (d < lo) { lo = d; jlo = j; }
            if (d > hi) { hi = d; jhi = j; }
        }
        const double step = std::numbers::pi / dirs;
        lo = std::min(lo, refine(step * (jlo - 1), step * (jlo + 1), -1));
        hi = std::max(hi, refine(step * (jhi - 1), step * (jhi + 1), +1));
        return mu_tilde(lo, hi);
    }

private:
    double t(int i) const { return static_cast<double>(i) / n_; }
    double at(double a) const { return delta(Vec2(std::cos(a), std::sin(a))); }

    Mat2 advance(Mat2 w, double t0, double t1, int steps) const {
        const Mat2 j = j0();
        auto rhs = [&](double tt, const Mat2& x) -> Mat2 { return -x * j * s_(tt); };
        const double h = (t1 - t0) / steps;
        double tt = t0;
        for (int k = 0; k < steps; ++k) {
            const Mat2 k1 = rhs(tt, w);
            const Mat2 k2 = rhs(tt + h / 2, w + h / 2 * k1);
            const Mat2 k3 = rhs(tt + h / 2, w + h / 2 * k2);
            const Mat2 k4 = rhs(tt + h, w + h * k3);
            w += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
            tt += h;
        }
        return w;
    }

    double turn(const Mat2& wa, const Mat2& wb, double ta, double tb, const Vec2& z, int depth) const {
        const Vec2 a = wa * z, b = wb * z;
        const double d = std::atan2(a[0] * b[1] - a[1] * b[0], a.dot(b));
        if (std::abs(d) < 0.3 || depth > 40) return d;
        const double tm = (ta + tb) / 2;
        const Mat2 wm = advance(wa, ta, tm, 4);
        return turn(wa, wm, ta, tm, z, depth + 1) + turn(wm, wb, tm, tb, z, depth + 1);
    }

    double refine(double a, double b, double sign) const {
        const double g = (std::sqrt(5.0) - 1) / 2;
        double c = b - g * (b - a), d = a + g * (b - a);
        double fc = sign * at(c), fd = sign * at(d);
        while (b - a > 1e-9) {
            if (fc > fd) { b = d; d = c; fd = fc; c = b - g * (b - a); fc = sign * at(c); }
            else { a = c; c = d; fc = fd; d = a + g * (b - a); fd = sign * at(d); }
        }
        return sign * std::max(fc, fd);
    }

    LoopFn s_;
    int n_;
    std::vector<Mat2> w_;
};

struct CorpusEntry {
    TrigLoop loop;
    SymplecticPath path;
};

/// Nondegenerate random paths: |det(phi(1) - I)| >= 1e-3.
inline std::vector<CorpusEntry> random_corpus(std::uint64_t seed, int count, int n = 256) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    while (static_cast<int>(out.size()) < count) {
        TrigLoop l = TrigLoop::random(rng);
        SymplecticPath p = SymplecticPath::from_generator(l, n, 8);
        if (std::abs((p.monodromy() - Mat2::Identity()).determinant()) < 1e-3) continue;
        out.push_back({l, std::move(p)});
    }
    return out;
}

} // namespace reebkit::testing
