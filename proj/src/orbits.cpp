#include "reebkit/orbits.hpp"

#include "reebkit/errors.hpp"
#include "reebkit/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace reebkit {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2 * pi;

int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

double frac_distance(double x) { return std::abs(x - std::round(x)); }

// Number of lifted principal circles covered by an orbit of period T.
double lifted_turns(const ClosedOrbit& o) {
    const double circle = o.which == Principal::KPrime ? o.system.w_period() : o.system.z_period();
    return o.period() / circle;
}

} // namespace

std::string principal_name(Principal which) {
    switch (which) {
    case Principal::K: return "K";
    case Principal::KPrime: return "K'";
    default: return "other";
    }
}

int ClosedOrbit::total_deck_power() const {
    const int p = system.order();
    return mod(static_cast<long long>(multiplicity) * deck_power, p);
}

ClosedOrbit ClosedOrbit::iterate(int k) const {
    if (k < 1) throw PreconditionError("iterate index must be >= 1");
    ClosedOrbit out = *this;
    out.multiplicity = multiplicity * k;
    return out;
}

bool ClosedOrbit::closes(double tol) const {
    const Point4 end = flow(system, anchor, prime_period);
    const Point4 target = deck_action(system.lens_or_trivial(), deck_power, anchor);
    return (end.vec() - target.vec()).norm() <= tol;
}

ClosedOrbit principal_orbit(const ContactSystem& sys, Principal which) {
    const LensParams l = sys.lens_or_trivial();
    switch (which) {
    case Principal::K:
        return {sys, Point4{1, 0, 0, 0}, sys.z_period() / l.p, 1, 1 % l.p, Principal::K};
    case Principal::KPrime:
        return {sys, Point4{0, 0, 1, 0}, sys.w_period() / l.p, 1, l.p == 1 ? 0 : l.q_inverse(), Principal::KPrime};
    default:
        throw PreconditionError("principal_orbit needs K or K'");
    }
}

std::vector<ClosedOrbit> catalog(const ContactSystem& sys, double C) {
    if (!(C > 0)) throw PreconditionError("catalog bound must be positive");
    if (sys.family() == Family::Round) throw DegenerateError("degenerate: orbit families not isolated");
    const LensParams l = sys.lens_or_trivial();
    const ClosedOrbit k = principal_orbit(sys, Principal::K);
    const ClosedOrbit kp = principal_orbit(sys, Principal::KPrime);

    // An iterate of K whose transverse rotation closes up means every torus
    // orbit closes at that time: the orbits below C are then not isolated.
    for (int m = 1; m * k.prime_period <= C * (1 + 1e-12); ++m) {
        const double t = m * k.prime_period;
        if (frac_distance(t / sys.w_period() - static_cast<double>(mod(m, l.p)) * l.q / l.p) < 1e-9)
            throw DegenerateError("degenerate: orbit families not isolated");
    }

    std::vector<ClosedOrbit> out;
    for (const ClosedOrbit* base : {&k, &kp})
        for (int m = 1; m * base->prime_period <= C * (1 + 1e-12); ++m) out.push_back(base->iterate(m));
    std::stable_sort(out.begin(), out.end(),
                     [](const ClosedOrbit& a, const ClosedOrbit& b) { return a.period() < b.period(); });
    return out;
}

// ---------------------------------------------------------------------------

Vec4 project_to_xi(const Point4& pt, const Vec4& v) {
    const Vec4 x = pt.vec();
    const Vec4 ix = mul_i(x);
    const double n2 = x.squaredNorm();
    return v - (v.dot(x) / n2) * x - (v.dot(ix) / n2) * ix;
}

TransverseFrame TransverseFrame::disk(const ContactSystem&) {
    return TransverseFrame([](const Point4& pt) { return global_section(pt); }, FrameClass{0});
}

TransverseFrame TransverseFrame::constant(const ContactSystem&, const Vec4& c, FrameClass cls) {
    return TransverseFrame([c](const Point4&) { return c; }, cls);
}

TransverseFrame TransverseFrame::pdisk_normal(const ContactSystem&, const PDisk& disk) {
    return TransverseFrame(
        [disk](const Point4& pt) {
            const cplx b = disk.axis() == DiskAxis::Z ? pt.z() : pt.w();
            return disk.d_r(1, std::arg(b));
        },
        FrameClass{0});
}

TransverseFrame TransverseFrame::shifted(int m) const {
    return TransverseFrame(section_, FrameClass{cls_.offset + m}, twist_ + m);
}

std::pair<Vec4, Vec4> TransverseFrame::at(const ContactSystem& sys, const Point4& pt, double s) const {
    Vec4 x = project_to_xi(pt, section_(pt));
    if (twist_ != 0) {
        const double a = two_pi * twist_ * s;
        x = std::cos(a) * x + std::sin(a) * mul_i(x);
    }
    const double n = x.norm();
    if (!(n > 1e-8)) throw NumericalError("frame section vanishes in the contact plane");
    const Vec4 e1 = std::sqrt(sys.normalizer(pt.vec())) / n * x;
    return {e1, mul_i(e1)};
}

Vec2 TransverseFrame::coordinates(const ContactSystem& sys, const Point4& pt, double s, const Vec4& v) const {
    const auto [e1, e2] = at(sys, pt, s);
    const Vec4 x = pt.vec();
    return {sys.dlambda(x, v, e2), sys.dlambda(x, e1, v)};
}

// ---------------------------------------------------------------------------

SymplecticPath linearized_path(const ClosedOrbit& orbit, const TransverseFrame& frame, const LinearizationOptions& opt) {
    if (!orbit.closes_on_lift())
        throw UnsupportedError("orbit does not close on the lift; no disk framing available in the quotient");
    const ContactSystem& sys = orbit.system;
    const double T = orbit.period();
    const double turns = T * std::max(sys.z_rate(), sys.w_rate()) / two_pi;
    const int n = std::max(256, static_cast<int>(std::ceil(turns - 1e-9)) * opt.samples_per_turn);

    const double fd = 1e-6;
    OdeRhs rhs = [&](double, const State& s, State& ds) {
        const Vec4 x = s.segment<4>(0);
        ds.resize(12);
        ds.segment<4>(0) = reeb_field(sys, x);
        for (int j = 0; j < 2; ++j) {
            const Vec4 v = s.segment<4>(4 + 4 * j);
            const double nv = v.norm();
            if (nv == 0) {
                ds.segment<4>(4 + 4 * j).setZero();
                continue;
            }
            const Vec4 u = v / nv;
            ds.segment<4>(4 + 4 * j) = nv * (reeb_field(sys, x + fd * u) - reeb_field(sys, x - fd * u)) / (2 * fd);
        }
    };
    OdeProjector project = [](State& s) {
        Vec4 x = s.segment<4>(0);
        x.normalize();
        s.segment<4>(0) = x;
        for (int j = 0; j < 2; ++j) {
            Vec4 v = s.segment<4>(4 + 4 * j);
            s.segment<4>(4 + 4 * j) = v - v.dot(x) * x;
        }
    };

    const Point4 x0 = orbit.anchor;
    const auto [e1, e2] = frame.at(sys, x0, 0);
    State state(12);
    state << x0.vec(), e1, e2;

    OdeOptions o;
    o.rtol = opt.rtol;
    o.atol = opt.atol;
    o.h_init = T / n;
    o.h_max = T / n;

    std::vector<Mat2> samples(n + 1);
    samples[0] = Mat2::Identity();
    for (int i = 0; i < n; ++i) {
        const double t0 = T * i / n, t1 = T * (i + 1) / n;
        const OdeResult r = integrate(rhs, state, t0, t1, o, project);
        state = r.x;
        o.h_init = r.h_last;
        const double s = static_cast<double>(i + 1) / n;
        const Point4 x = Point4::from_vec(state.segment<4>(0));
        Mat2 phi;
        phi.col(0) = frame.coordinates(sys, x, s, state.segment<4>(4));
        phi.col(1) = frame.coordinates(sys, x, s, state.segment<4>(8));
        const double det = phi.determinant();
        if (!(std::abs(det - 1) <= opt.det_tol)) {
            std::ostringstream os;
            os << "linearized flow lost symplecticity (det " << det << " at t = " << t1 << ")";
            throw IntegrationError(os.str());
        }
        samples[i + 1] = phi / std::sqrt(det);
    }
    return SymplecticPath(std::move(samples));
}

SymmetricLoop asymptotic_loop(const ClosedOrbit& orbit, const TransverseFrame& frame, const LinearizationOptions& opt) {
    return loop_from_path(linearized_path(orbit, frame, opt));
}

int frame_offset(const ClosedOrbit& orbit, const TransverseFrame& frame, const TransverseFrame& reference, int samples) {
    if (!orbit.closes_on_lift()) throw UnsupportedError("orbit does not close on the lift");
    const ContactSystem& sys = orbit.system;
    std::vector<Vec2> ref(samples), cur(samples);
    for (int i = 0; i < samples; ++i) {
        const double s = static_cast<double>(i) / samples;
        const Point4 x = orbit.at(s * orbit.period());
        cur[i] = reference.coordinates(sys, x, s, frame.at(sys, x, s).first);
        ref[i] = Vec2(1, 0);
    }
    return wind_relative(ref, cur);
}

// ---------------------------------------------------------------------------

double principal_rho_closed_form(const ClosedOrbit& orbit, int k) {
    if (orbit.which == Principal::Other || orbit.system.family() != Family::Ellipsoid)
        throw PreconditionError("closed form needs a principal orbit of an ellipsoid");
    const ClosedOrbit it = orbit.iterate(k);
    if (!it.closes_on_lift()) throw UnsupportedError("iterate does not close on the lift");
    const double t = it.period();
    return t / orbit.system.z_period() + t / orbit.system.w_period();
}

OrbitIndex orbit_index(const ClosedOrbit& orbit, int k, const OrbitIndexOptions& opt) {
    const ClosedOrbit it = orbit.iterate(k);
    if (!it.closes_on_lift())
        throw UnsupportedError("iterate " + std::to_string(k) + " of " + principal_name(orbit.which) +
                               " is not contractible in the quotient; disk framing unsupported");
    const ContactSystem& sys = it.system;
    OrbitIndex out;
    out.k = k;
    out.period = it.period();

    TransverseFrame frame = TransverseFrame::disk(sys);
    if (opt.route == FramingRoute::PDiskNormal) {
        if (orbit.which == Principal::Other) throw UnsupportedError("p-disk framing needs a principal orbit");
        const PDisk disk(sys.lens_or_trivial(), orbit.which == Principal::K ? DiskAxis::Z : DiskAxis::W);
        frame = TransverseFrame::pdisk_normal(sys, disk);
        // The disk section winds sl/p times around the p-disk normal per lifted circle.
        const int turns = static_cast<int>(std::lround(lifted_turns(it)));
        out.frame_shift = -binding_sl_winding(disk) * turns;
    }

    const SymplecticPath path = linearized_path(it, frame, opt.linearization);
    const GeometricIndex g = cz_geometric(path);
    out.mu = g.mu + 2 * out.frame_shift;
    out.degenerate = g.degenerate;
    out.rho = rotation_number(path).rho + out.frame_shift;
    if (opt.spectral) {
        const SpectralIndex s = cz_spectral(loop_from_path(path), opt.spectral_options);
        out.mu_spectral = s.mu + 2 * out.frame_shift;
        out.degenerate = out.degenerate || s.degenerate;
    } else {
        out.mu_spectral = out.mu;
    }
    return out;
}

} // namespace reebkit
