#include "reebkit/geometry.hpp"

#include "reebkit/errors.hpp"
#include "reebkit/integrator.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace reebkit {

using std::numbers::pi;

Point4 normalized(const Point4& pt) {
    const double n = pt.norm();
    if (n == 0) throw PreconditionError("cannot project the origin onto S^3");
    return Point4::from_vec(pt.vec() / n);
}

bool Tangent4::is_tangent(double tol) const {
    return std::abs(base.vec().dot(v)) <= tol * std::max(1.0, v.norm());
}

Vec4 global_section(const Point4& pt) {
    const cplx z = pt.z(), w = pt.w();
    return Point4::from_complex(-std::conj(w), std::conj(z)).vec();
}

LensParams LensParams::make(int p, int q) {
    if (p < 1) throw PreconditionError("lens parameter p must be >= 1");
    if (q < 1 || q > p) throw PreconditionError("lens parameter q must satisfy 1 <= q <= p");
    if (std::gcd(p, q) != 1) throw PreconditionError("lens parameters must be coprime");
    return {p, q};
}

int LensParams::q_inverse() const {
    if (p == 1) return 0;
    for (int k = 1; k < p; ++k)
        if ((k * q) % p == 1) return k;
    throw PreconditionError("q has no inverse modulo p");
}

ContactSystem::ContactSystem(Family f, double a, double b, std::optional<LensParams> lens)
    : family_(f), a_(a), b_(b), lens_(lens) {}

ContactSystem ContactSystem::round(std::optional<LensParams> lens) {
    if (lens) LensParams::make(lens->p, lens->q);
    return ContactSystem(Family::Round, pi, pi, lens);
}

ContactSystem ContactSystem::ellipsoid(double a, double b, std::optional<LensParams> lens) {
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b))
        throw PreconditionError("ellipsoid parameters must be finite and strictly positive");
    if (lens) LensParams::make(lens->p, lens->q);
    return ContactSystem(Family::Ellipsoid, a, b, lens);
}

ContactSystem ContactSystem::with_lens(std::optional<LensParams> lens) const {
    if (lens) LensParams::make(lens->p, lens->q);
    ContactSystem out = *this;
    out.lens_ = lens;
    return out;
}

double ContactSystem::z_rate() const { return 2 * pi / a_; }
double ContactSystem::w_rate() const { return 2 * pi / b_; }
double ContactSystem::z_period() const { return a_; }
double ContactSystem::w_period() const { return b_; }

double ContactSystem::normalizer(const Vec4& x) const {
    return 0.5 * z_rate() * (x[0] * x[0] + x[1] * x[1]) + 0.5 * w_rate() * (x[2] * x[2] + x[3] * x[3]);
}

Vec4 ContactSystem::normalizer_gradient(const Vec4& x) const {
    return {z_rate() * x[0], z_rate() * x[1], w_rate() * x[2], w_rate() * x[3]};
}

namespace {
double lambda0_raw(const Vec4& x, const Vec4& v) {
    return 0.5 * (x[0] * v[1] - x[1] * v[0] + x[2] * v[3] - x[3] * v[2]);
}
} // namespace

double ContactSystem::lambda(const Vec4& x, const Vec4& v) const { return lambda0_raw(x, v) / normalizer(x); }

double ContactSystem::dlambda(const Vec4& x, const Vec4& u, const Vec4& v) const {
    // d(lambda0 / H) = omega / H - dH ^ lambda0 / H^2
    const double h = normalizer(x);
    const Vec4 g = normalizer_gradient(x);
    return omega(u, v) / h - (g.dot(u) * lambda0_raw(x, v) - g.dot(v) * lambda0_raw(x, u)) / (h * h);
}

double ContactSystem::volume(const Vec4& x, const Vec4& u, const Vec4& v, const Vec4& w) const {
    return lambda(x, u) * dlambda(x, v, w) + lambda(x, v) * dlambda(x, w, u) + lambda(x, w) * dlambda(x, u, v);
}

double lambda0_eval(const Point4& pt, const Tangent4& v) {
    if (!v.is_tangent()) throw PreconditionError("vector is not tangent to S^3 at the base point");
    return lambda0_raw(pt.vec(), v.v);
}

Vec4 reeb_field(const ContactSystem& sys, const Vec4& xin) {
    const double n = xin.norm();
    if (n == 0) throw PreconditionError("Reeb field undefined at the origin");
    const Vec4 x = xin / n;
    const Point4 pt = Point4::from_vec(x);
    const Vec4 e0 = mul_i(x);
    const Vec4 e1 = global_section(pt);
    const Vec4 e2 = mul_i(e1);
    const Vec4 frame[3] = {e0, e1, e2};

    Eigen::Matrix3d m;
    Eigen::Vector3d rhs(1, 0, 0);
    for (int j = 0; j < 3; ++j) {
        m(0, j) = sys.lambda(x, frame[j]);
        m(1, j) = sys.dlambda(x, frame[j], e1);
        m(2, j) = sys.dlambda(x, frame[j], e2);
    }
    const double det = m.determinant();
    if (!(std::abs(det) > 1e-14)) {
        std::ostringstream os;
        os << "Reeb system singular (det=" << det << ")";
        throw NumericalError(os.str());
    }
    const Eigen::Vector3d c = m.partialPivLu().solve(rhs);
    return c[0] * e0 + c[1] * e1 + c[2] * e2;
}

Tangent4 reeb_vector(const ContactSystem& sys, const Point4& pt) {
    return Tangent4{pt, reeb_field(sys, pt.vec())};
}

Point4 flow(const ContactSystem& sys, const Point4& pt, double t) {
    const cplx rz = std::polar(1.0, sys.z_rate() * t);
    const cplx rw = std::polar(1.0, sys.w_rate() * t);
    return Point4::from_complex(rz * pt.z(), rw * pt.w());
}

Point4 flow_integrated(const ContactSystem& sys, const Point4& pt, double t, double tol) {
    if (!(tol > 0)) throw PreconditionError("flow tolerance must be positive");
    OdeOptions opt;
    opt.rtol = opt.atol = tol;
    opt.h_init = 1e-2 * std::min(sys.z_period(), sys.w_period());
    const OdeRhs rhs = [&sys](double, const State& x, State& dx) { dx = reeb_field(sys, Vec4(x)); };
    const OdeProjector proj = [](State& x) { x /= x.norm(); };
    const OdeResult r = integrate(rhs, State(pt.vec()), 0.0, t, opt, proj);
    return Point4::from_vec(Vec4(r.x));
}

namespace {
int wrap_mod(long long k, int p) {
    long long r = k % p;
    return static_cast<int>(r < 0 ? r + p : r);
}
} // namespace

Point4 deck_action(const LensParams& lens, int k, const Point4& pt) {
    return Point4::from_vec(deck_push(lens, k, pt.vec()));
}

Vec4 deck_push(const LensParams& lens, int k, const Vec4& v) {
    const int kk = wrap_mod(k, lens.p);
    const cplx gz = std::polar(1.0, 2 * pi * kk / lens.p);
    const cplx gw = std::polar(1.0, 2 * pi * static_cast<double>(wrap_mod(static_cast<long long>(kk) * lens.q, lens.p)) / lens.p);
    const Point4 p = Point4::from_vec(v);
    return Point4::from_complex(gz * p.z(), gw * p.w()).vec();
}

std::optional<int> deck_power_between(const LensParams& lens, const Point4& pt1, const Point4& pt2, double tol) {
    for (int k = 0; k < lens.p; ++k)
        if ((deck_action(lens, k, pt1).vec() - pt2.vec()).norm() <= tol) return k;
    return std::nullopt;
}

bool lens_equivalent(const LensParams& lens, const Point4& pt1, const Point4& pt2, double tol) {
    return deck_power_between(lens, pt1, pt2, tol).has_value();
}

} // namespace reebkit
