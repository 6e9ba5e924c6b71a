#include "reebkit/index.hpp"

#include "reebkit/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace reebkit {

using std::numbers::pi;

namespace {

constexpr double two_pi = 2 * pi;

double det_scale(const Mat2& m) { return std::max(1.0, 0.5 * m.squaredNorm()); }

} // namespace

// ---------------------------------------------------------------------------
// SymmetricLoop

SymmetricLoop::SymmetricLoop(std::vector<Mat2> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw PreconditionError("symmetric loop needs at least one sample");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Mat2& s = samples_[i];
        if (!s.allFinite()) throw PreconditionError("symmetric loop has non-finite entries");
        if ((s - s.transpose()).norm() >= 1e-12) {
            std::ostringstream os;
            os << "loop sample " << i << " is not symmetric";
            throw PreconditionError(os.str());
        }
    }
    const int m = size();
    const int top = (m - 1) / 2;
    std::vector<double> c(m), s(m);
    for (int l = 0; l < m; ++l) {
        c[l] = std::cos(two_pi * l / m);
        s[l] = std::sin(two_pi * l / m);
    }
    ccoef_.assign(top + 1, Mat2::Zero());
    scoef_.assign(top + 1, Mat2::Zero());
    for (int k = 0; k <= top; ++k) {
        Mat2 ac = Mat2::Zero(), as = Mat2::Zero();
        for (int l = 0; l < m; ++l) {
            const int idx = static_cast<int>((static_cast<long long>(k) * l) % m);
            ac += c[idx] * samples_[l];
            as += s[idx] * samples_[l];
        }
        ccoef_[k] = ac / m;
        scoef_[k] = as / m;
    }
}

SymmetricLoop SymmetricLoop::from_function(const LoopFn& f, int m) {
    if (m < 1) throw PreconditionError("loop grid must be positive");
    std::vector<Mat2> v(m);
    for (int i = 0; i < m; ++i) {
        const Mat2 s = f(static_cast<double>(i) / m);
        v[i] = 0.5 * (s + s.transpose());
    }
    return SymmetricLoop(std::move(v));
}

SymmetricLoop SymmetricLoop::constant(const Mat2& s, int m) {
    return from_function([&s](double) { return s; }, m);
}

Mat2 SymmetricLoop::cos_moment(int m) const {
    m = std::abs(m);
    return m < static_cast<int>(ccoef_.size()) ? ccoef_[m] : Mat2::Zero();
}

Mat2 SymmetricLoop::sin_moment(int m) const {
    const int a = std::abs(m);
    if (a >= static_cast<int>(scoef_.size())) return Mat2::Zero();
    return m < 0 ? Mat2(-scoef_[a]) : scoef_[a];
}

Mat2 SymmetricLoop::eval(double t) const {
    Mat2 out = ccoef_[0];
    for (std::size_t k = 1; k < ccoef_.size(); ++k) {
        const double arg = two_pi * static_cast<double>(k) * t;
        out += 2 * (std::cos(arg) * ccoef_[k] + std::sin(arg) * scoef_[k]);
    }
    return out;
}

LoopFn SymmetricLoop::as_function() const {
    return [self = *this](double t) { return self.eval(t); };
}

// ---------------------------------------------------------------------------
// SymplecticPath

SymplecticPath::SymplecticPath(std::vector<Mat2> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 65) throw PreconditionError("symplectic path needs a grid of at least 64 intervals");
    if ((samples_[0] - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-12)
        throw PreconditionError("symplectic path must start at the identity");
    samples_[0] = Mat2::Identity();
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Mat2& m = samples_[i];
        if (!m.allFinite()) throw PreconditionError("symplectic path has non-finite entries");
        if (std::abs(m.determinant() - 1.0) > 1e-8 * det_scale(m)) {
            std::ostringstream os;
            os << "sample " << i << " has det " << m.determinant() << ", not symplectic";
            throw PreconditionError(os.str());
        }
    }
}

SymplecticPath SymplecticPath::from_function(const std::function<Mat2(double)>& f, int n) {
    std::vector<Mat2> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = f(static_cast<double>(i) / n);
    return SymplecticPath(std::move(v));
}

SymplecticPath SymplecticPath::from_generator(const LoopFn& s, int n, int substeps) {
    if (n < 64 || substeps < 1) throw PreconditionError("generator grid too coarse");
    const Mat2 j = j0();
    const double h = 1.0 / (static_cast<double>(n) * substeps);
    std::vector<Mat2> v(n + 1);
    Mat2 phi = Mat2::Identity();
    v[0] = phi;
    auto rhs = [&](double t, const Mat2& x) -> Mat2 { return j * s(t) * x; };
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < substeps; ++k) {
            const double t = (static_cast<double>(i) * substeps + k) * h;
            const Mat2 k1 = rhs(t, phi);
            const Mat2 k2 = rhs(t + h / 2, phi + h / 2 * k1);
            const Mat2 k3 = rhs(t + h / 2, phi + h / 2 * k2);
            const Mat2 k4 = rhs(t + h, phi + h * k3);
            phi += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        }
        v[i + 1] = phi;
    }
    return SymplecticPath(std::move(v));
}

SymplecticPath SymplecticPath::rotation_path(double angle, int n) {
    return from_function([angle](double t) { return rotation(angle * t); }, n);
}

SymplecticPath SymplecticPath::iterate(int k) const {
    if (k < 1) throw PreconditionError("iterate count must be >= 1");
    const int n = intervals();
    std::vector<Mat2> pw(k + 1);
    pw[0] = Mat2::Identity();
    for (int j = 1; j <= k; ++j) pw[j] = pw[j - 1] * monodromy();
    std::vector<Mat2> v(static_cast<std::size_t>(k) * n + 1);
    for (int g = 0; g <= k * n; ++g) {
        const int j = g / n, i = g % n;
        v[g] = samples_[i] * pw[j];
    }
    return SymplecticPath(std::move(v));
}

SymplecticPath SymplecticPath::inverse() const {
    std::vector<Mat2> v(samples_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples_[i].inverse();
    return SymplecticPath(std::move(v));
}

SymplecticPath SymplecticPath::left_multiply(const SymplecticPath& psi) const {
    if (psi.intervals() != intervals()) throw PreconditionError("paths must share the sampling grid");
    std::vector<Mat2> v(samples_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = psi.samples_[i] * samples_[i];
    return SymplecticPath(std::move(v));
}

bool SymplecticPath::degenerate(double tol) const {
    return std::abs((monodromy() - Mat2::Identity()).determinant()) < tol;
}

// ---------------------------------------------------------------------------
// Geometric index

int mu_tilde(double lo, double hi) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw PreconditionError("mu_tilde needs a finite interval with lo <= hi");
    if (hi - lo >= 0.5) {
        std::ostringstream os;
        os << "interval [" << lo << ", " << hi << "] has length >= 1/2";
        throw PreconditionError(os.str());
    }
    const double k = std::ceil(lo);
    if (k < hi) return 2 * static_cast<int>(k);
    return 2 * (static_cast<int>(std::ceil(hi)) - 1) + 1;
}

double delta_phi(const SymplecticPath& path, const Vec2& zeta) {
    if (zeta.norm() == 0) throw PreconditionError("direction must be non-zero");
    const auto& s = path.samples();
    Vec2 v = s[0] * zeta;
    double prev = std::atan2(v[1], v[0]);
    double total = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        v = s[i] * zeta;
        const double a = std::atan2(v[1], v[0]);
        const double d = std::remainder(a - prev, two_pi);
        if (std::abs(d) > pi / 2) {
            std::ostringstream os;
            os << "phase jump " << d << " at sample " << i << "; refine the path grid";
            throw RefinementRequired(os.str());
        }
        total += d;
        prev = a;
    }
    return total / two_pi;
}

namespace {

double delta_at(const SymplecticPath& path, double s) { return delta_phi(path, Vec2(std::cos(s), std::sin(s))); }

// Golden-section search for an extremum of f on [a, b]; sign = +1 maximizes.
double golden(const std::function<double(double)>& f, double a, double b, double sign) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = sign * f(c), fd = sign * f(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = sign * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = sign * f(d);
        }
    }
    return sign * std::max(fc, fd);
}

} // namespace

GeometricIndex winding_interval(const SymplecticPath& path) {
    constexpr int dirs = 720;
    std::vector<double> vals(dirs);
    for (int j = 0; j < dirs; ++j) vals[j] = delta_at(path, pi * j / dirs);
    const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
    const int jmin = static_cast<int>(mn - vals.begin());
    const int jmax = static_cast<int>(mx - vals.begin());
    auto f = [&path](double s) { return delta_at(path, s); };
    const double step = pi / dirs;
    GeometricIndex out;
    out.lo = std::min(*mn, golden(f, step * (jmin - 1), step * (jmin + 1), -1.0));
    out.hi = std::max(*mx, golden(f, step * (jmax - 1), step * (jmax + 1), +1.0));
    out.degenerate = path.degenerate();
    return out;
}

GeometricIndex cz_geometric(const SymplecticPath& path) {
    GeometricIndex out = winding_interval(path);
    // Snap roundoff at integers and half-integers (rigid rotations).
    for (double* x : {&out.lo, &out.hi}) {
        const double r = std::round(2 * *x) / 2;
        if (std::abs(*x - r) < 1e-11) *x = r;
    }
    if (out.hi - out.lo >= 0.5) {
        std::ostringstream os;
        os << "winding interval [" << out.lo << ", " << out.hi << "] has length >= 1/2";
        throw NumericalError(os.str());
    }
    out.mu = mu_tilde(out.lo, out.hi);
    return out;
}

// ---------------------------------------------------------------------------
// Spectral index

namespace {

// Solve (T - sigma) y = x for symmetric tridiagonal T (diagonal d, off-diagonal
// e) by Gaussian elimination with partial pivoting; tiny pivots become eps.
Eigen::VectorXd tridiag_solve(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double sigma,
                              Eigen::VectorXd x, double eps) {
    const Eigen::Index n = d.size();
    Eigen::VectorXd dd = d.array() - sigma;
    Eigen::VectorXd dl = e, du = e;
    Eigen::VectorXd du2 = Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 2, 1));
    auto guard = [eps](double v) { return std::abs(v) < eps ? (v < 0 ? -eps : eps) : v; };
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            dd[i] = guard(dd[i]);
            const double fact = dl[i] / dd[i];
            dd[i + 1] -= fact * du[i];
            x[i + 1] -= fact * x[i];
        } else {
            const double fact = dd[i] / dl[i];
            dd[i] = dl[i];
            const double tmp = du[i];
            du[i] = dd[i + 1];
            dd[i + 1] = tmp - fact * dd[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            std::swap(x[i], x[i + 1]);
            x[i + 1] -= fact * x[i];
        }
    }
    dd[n - 1] = guard(dd[n - 1]);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        double acc = x[i];
        if (i + 1 < n) acc -= du[i] * y[i + 1];
        if (i + 2 < n) acc -= du2[i] * y[i + 2];
        y[i] = acc / dd[i];
    }
    return y;
}

struct Basis {
    int kind;  // 0 constant, 1 cosine, 2 sine
    int freq;
};

Basis basis_of(int n) {
    if (n == 0) return {0, 0};
    return {n % 2 == 1 ? 1 : 2, (n + 1) / 2};
}

Mat2 gram(const SymmetricLoop& s, const Basis& a, const Basis& b) {
    const double r2 = std::sqrt(2.0);
    if (a.kind == 0 && b.kind == 0) return s.cos_moment(0);
    if (a.kind == 0 || b.kind == 0) {
        const Basis& o = a.kind == 0 ? b : a;
        return o.kind == 1 ? Mat2(r2 * s.cos_moment(o.freq)) : Mat2(r2 * s.sin_moment(o.freq));
    }
    const int dm = a.freq - b.freq, sm = a.freq + b.freq;
    if (a.kind == 1 && b.kind == 1) return s.cos_moment(dm) + s.cos_moment(sm);
    if (a.kind == 2 && b.kind == 2) return s.cos_moment(dm) - s.cos_moment(sm);
    if (a.kind == 1) return s.sin_moment(sm) - s.sin_moment(dm);
    return s.sin_moment(sm) + s.sin_moment(dm);
}

} // namespace

SpectralData spectrum(const SymmetricLoop& s, int window, const SpectralOptions& opt) {
    if (window < 1) throw PreconditionError("spectral window must be >= 1");
    if (opt.modes < 1 || opt.resample < 16) throw PreconditionError("invalid spectral discretization");
    const int nb = 2 * opt.modes + 1;
    const int dim = 2 * nb;
    const Mat2 j = j0();

    std::vector<Basis> basis(nb);
    for (int n = 0; n < nb; ++n) basis[n] = basis_of(n);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < nb; ++n) {
        for (int m = n; m < nb; ++m) {
            Mat2 block = -gram(s, basis[n], basis[m]);
            // <phi_n, phi_m'>: only the (cos_k, sin_k) pairs couple.
            double dnm = 0;
            if (basis[n].freq == basis[m].freq && basis[n].freq > 0) {
                if (basis[n].kind == 1 && basis[m].kind == 2) dnm = two_pi * basis[n].freq;
                if (basis[n].kind == 2 && basis[m].kind == 1) dnm = -two_pi * basis[n].freq;
            }
            block -= dnm * j;
            a.block<2, 2>(2 * n, 2 * m) = block;
            a.block<2, 2>(2 * m, 2 * n) = block.transpose();
        }
    }

    Eigen::Tridiagonalization<Eigen::MatrixXd> tri(a);
    const Eigen::VectorXd d = tri.diagonal();
    const Eigen::VectorXd e = tri.subDiagonal();
    // The tridiagonal QR iteration expects an O(1) matrix.
    const double scale = std::max(d.cwiseAbs().maxCoeff(), e.size() ? e.cwiseAbs().maxCoeff() : 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d / scale, e / scale, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("tridiagonal eigenvalue iteration failed");
    const Eigen::VectorXd ev = es.eigenvalues() * scale;

    const int i0 = static_cast<int>(std::lower_bound(ev.data(), ev.data() + dim, 0.0) - ev.data());
    const int lo = std::max(0, i0 - 2 * window);
    const int hi = std::min(dim, i0 + 2 * window);
    if (i0 == 0 || i0 == dim) throw NumericalError("spectrum does not straddle zero; increase the number of modes");

    const double tnorm = std::max(1.0, ev.cwiseAbs().maxCoeff());
    const double eps = 1e-14 * tnorm;
    const double cluster = 1e-8 * tnorm;

    // Basis values on the resampling grid.
    const int r = opt.resample;
    Eigen::MatrixXd table(r, nb);
    for (int l = 0; l < r; ++l) {
        const double t = static_cast<double>(l) / r;
        for (int n = 0; n < nb; ++n) {
            const Basis& b = basis[n];
            table(l, n) = b.kind == 0 ? 1.0
                          : b.kind == 1 ? std::sqrt(2.0) * std::cos(two_pi * b.freq * t)
                                        : std::sqrt(2.0) * std::sin(two_pi * b.freq * t);
        }
    }

    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> uni(-1, 1);

    SpectralData out;
    std::vector<Eigen::VectorXd> cluster_vecs;
    for (int k = lo; k < hi; ++k) {
        const double nu = ev[k];
        if (k == lo || nu - ev[k - 1] > cluster) cluster_vecs.clear();
        Eigen::VectorXd y(dim);
        for (int i = 0; i < dim; ++i) y[i] = uni(rng);
        for (int it = 0; it < 3; ++it) {
            y = tridiag_solve(d, e, nu, y, eps);
            for (const auto& c : cluster_vecs) y -= c.dot(y) * c;
            y.normalize();
        }
        cluster_vecs.push_back(y);
        const Eigen::VectorXd v = tri.matrixQ() * y;
        const double resid = (a * v - nu * v).norm();
        if (resid > 1e-6 * tnorm) {
            std::ostringstream os;
            os << "inverse iteration failed to converge for eigenvalue " << nu << " (residual " << resid << ")";
            throw NumericalError(os.str());
        }

        Eigen::MatrixXd coef(nb, 2);
        for (int n = 0; n < nb; ++n) {
            coef(n, 0) = v[2 * n];
            coef(n, 1) = v[2 * n + 1];
        }
        const Eigen::MatrixXd vals = table * coef;
        double amax = 0, amin = std::numeric_limits<double>::infinity();
        double total = 0;
        double prev = std::atan2(vals(r - 1, 1), vals(r - 1, 0));
        for (int l = 0; l < r; ++l) {
            const double amp = std::hypot(vals(l, 0), vals(l, 1));
            amax = std::max(amax, amp);
            amin = std::min(amin, amp);
            const double ang = std::atan2(vals(l, 1), vals(l, 0));
            total += std::remainder(ang - prev, two_pi);
            prev = ang;
        }
        if (amin < opt.amplitude_floor * amax) {
            std::ostringstream os;
            os << "eigenvector for eigenvalue " << nu << " nearly vanishes (min/max amplitude " << amin / amax
               << "); discretization failure";
            throw NumericalError(os.str());
        }
        out.eigenpairs.push_back({nu, static_cast<int>(std::lround(total / two_pi)), amin / amax});
        if (std::abs(nu) < opt.zero_tol) out.degenerate = true;
    }

    const int neg = i0 - 1 - lo;
    out.wind_neg = out.eigenpairs[neg].wind;
    out.wind_nonneg = out.eigenpairs[neg + 1].wind;
    out.parity = out.wind_neg == out.wind_nonneg ? 0 : 1;
    return out;
}

SpectralIndex cz_spectral(const SymmetricLoop& s, const SpectralOptions& opt) {
    const SpectralData sd = spectrum(s, 2, opt);
    return {sd.mu(), sd.degenerate};
}

// ---------------------------------------------------------------------------
// Rotation number

RotationEstimate rotation_number(const SymplecticPath& path, int iterates) {
    if (iterates < 8) throw PreconditionError("rotation number needs at least 8 iterates");
    auto f = [&path](double s) { return s + delta_phi(path, Vec2(std::cos(two_pi * s), std::sin(two_pi * s))); };

    constexpr int starts = 5;
    const int half = iterates / 2;
    std::vector<double> rich(starts), plain(starts);
    for (int j = 0; j < starts; ++j) {
        const double s0 = static_cast<double>(j) / starts;
        double x = s0, x_half = s0;
        for (int n = 1; n <= 2 * half; ++n) {
            x = f(x);
            if (n == half) x_half = x;
        }
        const double r_half = (x_half - s0) / half;
        const double r_full = (x - s0) / (2 * half);
        plain[j] = r_full;
        rich[j] = 2 * r_full - r_half;
    }
    double mean = 0, mean_plain = 0;
    for (int j = 0; j < starts; ++j) {
        mean += rich[j] / starts;
        mean_plain += plain[j] / starts;
    }
    double spread = 0;
    for (double v : rich) spread = std::max(spread, std::abs(v - mean));

    RotationEstimate out;
    out.birkhoff = mean;

    // The monodromy pins down the exact value: elliptic matrices fix the
    // fractional part, real eigenvectors are fixed points of the circle map.
    const Mat2& m = path.monodromy();
    const double tr = m.trace();
    if (std::abs(tr) < 2 - 1e-12) {
        const double theta = std::acos(tr / 2);
        const double frac = m(1, 0) > 0 ? theta / two_pi : 1 - theta / two_pi;
        out.rho = frac + std::round(mean - frac);
    } else {
        const double mu = tr > 0 ? (tr + std::sqrt(tr * tr - 4)) / 2 : (tr - std::sqrt(tr * tr - 4)) / 2;
        Vec2 v1(m(0, 1), mu - m(0, 0)), v2(mu - m(1, 1), m(1, 0));
        Vec2 v = v1.norm() >= v2.norm() ? v1 : v2;
        if (v.norm() < 1e-14) v = Vec2(1, 0);
        out.rho = std::round(2 * delta_phi(path, v)) / 2;
    }
    out.error = spread + std::abs(mean - mean_plain);
    return out;
}

// ---------------------------------------------------------------------------
// Relative winding

int wind_relative(const std::vector<Vec2>& z, const std::vector<Vec2>& w) {
    if (z.size() != w.size() || z.size() < 3) throw PreconditionError("loops must share a grid of >= 3 samples");
    auto check = [](const std::vector<Vec2>& v, const char* name) {
        double mn = std::numeric_limits<double>::infinity(), mx = 0;
        for (const auto& x : v) {
            mn = std::min(mn, x.norm());
            mx = std::max(mx, x.norm());
        }
        if (!(mx > 0) || mn < 1e-6 * mx) throw PreconditionError(std::string("loop ") + name + " is ill-conditioned (nearly vanishes)");
    };
    check(z, "Z");
    check(w, "W");
    const std::size_t n = z.size();
    auto rel = [&](std::size_t i) {
        const Vec2& a = z[i];
        const Vec2& b = w[i];
        return std::atan2(a[0] * b[1] - a[1] * b[0], a.dot(b));
    };
    double total = 0, prev = rel(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double cur = rel(i);
        const double d = std::remainder(cur - prev, two_pi);
        if (std::abs(d) > pi / 2) throw RefinementRequired("relative phase jumps by more than pi/2; refine the grid");
        total += d;
        prev = cur;
    }
    return static_cast<int>(std::lround(total / two_pi));
}

// ---------------------------------------------------------------------------

SymmetricLoop loop_from_path(const SymplecticPath& path, double tol) {
    const int n = path.intervals();
    const double h = 1.0 / n;
    const Mat2& mono = path.monodromy();
    const Mat2 mono_inv = mono.inverse();
    auto sample = [&](int j) -> Mat2 {
        if (j < 0) return path[j + n] * mono_inv;
        if (j > n) return path[j - n] * mono;
        return path[j];
    };
    static constexpr double c[3] = {3.0 / 4, -3.0 / 20, 1.0 / 60};
    const Mat2 j = j0();
    std::vector<Mat2> out(n);
    for (int i = 0; i < n; ++i) {
        Mat2 dphi = Mat2::Zero();
        for (int k = 1; k <= 3; ++k) dphi += c[k - 1] * (sample(i + k) - sample(i - k));
        dphi /= h;
        const Mat2 s = -j * dphi * path[i].inverse();
        const double defect = (s - s.transpose()).norm() / std::max(1.0, s.norm());
        if (defect > tol) {
            std::ostringstream os;
            os << "extracted loop not symmetric at sample " << i << " (defect " << defect << ")";
            throw PreconditionError(os.str());
        }
        out[i] = 0.5 * (s + s.transpose());
    }
    return SymmetricLoop(std::move(out));
}

} // namespace reebkit
