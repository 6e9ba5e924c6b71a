#pragma once

// Conley-Zehnder index of paths in Sp(2): spectral winding of the operator
// L_S = -J0 d/dt - S(t), the geometric mu-tilde of the winding interval,
// transverse rotation numbers and relative windings of loops.

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace reebkit {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

/// Standard complex structure on R^2, [[0,-1],[1,0]].
inline Mat2 j0() {
    Mat2 m;
    m << 0, -1, 1, 0;
    return m;
}

inline Mat2 rotation(double angle) {
    Mat2 m;
    m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return m;
}

using LoopFn = std::function<Mat2(double t)>;

/// Symmetric 1-periodic loop S(t), sampled at t_i = i/M, i = 0..M-1.
class SymmetricLoop {
public:
    explicit SymmetricLoop(std::vector<Mat2> samples);
    static SymmetricLoop from_function(const LoopFn& s, int m = 1024);
    static SymmetricLoop constant(const Mat2& s, int m = 64);

    int size() const { return static_cast<int>(samples_.size()); }
    const Mat2& operator[](int i) const { return samples_[i]; }
    const std::vector<Mat2>& samples() const { return samples_; }

    /// Integrals of S(t) cos(2 pi m t) and S(t) sin(2 pi m t) over [0,1]
    /// (exact for trigonometric polynomials resolved by the grid).
    Mat2 cos_moment(int m) const;
    Mat2 sin_moment(int m) const;

    /// Trigonometric interpolation of the samples.
    Mat2 eval(double t) const;
    LoopFn as_function() const;

private:
    std::vector<Mat2> samples_;
    std::vector<Mat2> ccoef_, scoef_;
};

/// Path phi: [0,1] -> Sp(2) sampled at t_i = i/N, i = 0..N, phi(0) = I.
class SymplecticPath {
public:
    explicit SymplecticPath(std::vector<Mat2> samples);
    static SymplecticPath from_function(const std::function<Mat2(double)>& f, int n = 256);
    /// Solves phi' = J0 S(t) phi, phi(0) = I by classical RK4 with `substeps`
    /// steps per sampling interval.
    static SymplecticPath from_generator(const LoopFn& s, int n = 256, int substeps = 8);
    /// t -> rotation(angle * t).
    static SymplecticPath rotation_path(double angle, int n = 256);

    int intervals() const { return static_cast<int>(samples_.size()) - 1; }
    const Mat2& operator[](int i) const { return samples_[i]; }
    const std::vector<Mat2>& samples() const { return samples_; }
    const Mat2& monodromy() const { return samples_.back(); }
    double time(int i) const { return static_cast<double>(i) / intervals(); }

    /// t -> phi(k t) on [0,1], using phi(j + r) = phi(r) phi(1)^j.
    SymplecticPath iterate(int k) const;
    /// t -> phi(t)^{-1}.
    SymplecticPath inverse() const;
    /// Pointwise product psi(t) phi(t) (same grid required).
    SymplecticPath left_multiply(const SymplecticPath& psi) const;

    /// |det(phi(1) - I)| below 1e-9.
    bool degenerate(double tol = 1e-9) const;

private:
    std::vector<Mat2> samples_;
};

/// mu-tilde of a closed interval of length < 1/2, with integer endpoints
/// resolved by the left-shift limit.
int mu_tilde(double lo, double hi);

/// Winding of t -> phi(t) zeta in turns. Throws RefinementRequired when
/// consecutive samples differ in phase by more than pi/2.
double delta_phi(const SymplecticPath& path, const Vec2& zeta);

struct GeometricIndex {
    int mu = 0;
    bool degenerate = false;
    double lo = 0, hi = 0;  // I_phi
};

/// Winding interval I_phi from 720 directions plus golden-section refinement
/// of both extremes.
GeometricIndex winding_interval(const SymplecticPath& path);
GeometricIndex cz_geometric(const SymplecticPath& path);

struct Eigenpair {
    double nu = 0;
    int wind = 0;
    double min_amplitude = 0;
};

struct SpectralData {
    std::vector<Eigenpair> eigenpairs;  // ascending in nu
    int wind_neg = 0;     // winding of the largest negative eigenvalue
    int wind_nonneg = 0;  // winding of the smallest non-negative eigenvalue
    int parity = 0;
    bool degenerate = false;

    int mu() const { return 2 * wind_neg + parity; }
};

struct SpectralOptions {
    int modes = 128;
    int resample = 1024;
    double amplitude_floor = 1e-6;
    double zero_tol = 1e-9;
};

/// Eigenvalues of the Fourier-Galerkin discretization of L_S nearest zero:
/// 2*window on each side, each with the winding of its eigenvector.
SpectralData spectrum(const SymmetricLoop& s, int window = 2, const SpectralOptions& opt = {});

struct SpectralIndex {
    int mu = 0;
    bool degenerate = false;
};

SpectralIndex cz_spectral(const SymmetricLoop& s, const SpectralOptions& opt = {});

struct RotationEstimate {
    double rho = 0;
    /// Spread of the extrapolated Birkhoff averages over starting angles.
    double error = 0;
    /// Extrapolated Birkhoff average before the monodromy refinement.
    double birkhoff = 0;
};

/// Rotation number of the lifted circle map s -> s + delta_phi(e^{2 pi i s}).
RotationEstimate rotation_number(const SymplecticPath& path, int iterates = 64);

/// Winding of W in the frame (Z, J0 Z) for periodic samples of two
/// non-vanishing plane loops on the same grid.
int wind_relative(const std::vector<Vec2>& z, const std::vector<Vec2>& w);

/// Homotopy class of a trivialization, relative to a fixed reference class.
struct FrameClass {
    int offset = 0;
};

/// wind(b2, b1) for frame classes.
inline int wind_between(const FrameClass& b2, const FrameClass& b1) { return b2.offset - b1.offset; }

/// S(t) = -J0 phi'(t) phi(t)^{-1} by sixth-order differences on the path grid.
/// Throws PreconditionError if the symmetry defect exceeds `tol` relative.
SymmetricLoop loop_from_path(const SymplecticPath& path, double tol = 1e-6);

} // namespace reebkit
