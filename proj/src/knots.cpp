#include "reebkit/knots.hpp"

#include "reebkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace reebkit {

using std::numbers::pi;

namespace {

int mod(long long a, int p) {
    const long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Unwrapped winding (in turns) of a closed loop of complex samples.
int loop_winding(const std::vector<cplx>& c, const char* what) {
    double mx = 0, mn = std::numeric_limits<double>::infinity();
    for (const auto& v : c) {
        mx = std::max(mx, std::abs(v));
        mn = std::min(mn, std::abs(v));
    }
    if (!(mx > 0) || mn < 1e-9 * mx) throw NumericalError(std::string(what) + ": loop passes through zero");
    double total = 0;
    double prev = std::arg(c.back());
    for (const auto& v : c) {
        const double a = std::arg(v);
        const double d = std::remainder(a - prev, 2 * pi);
        if (std::abs(d) > pi / 2) throw RefinementRequired(std::string(what) + ": phase step too coarse, refine");
        total += d;
        prev = a;
    }
    return static_cast<int>(std::lround(total / (2 * pi)));
}

// Hermitian product sum conj(u_i) v_i on C^2 in real coordinates.
cplx hermitian(const Vec4& u, const Vec4& v) {
    const Point4 a = Point4::from_vec(u), b = Point4::from_vec(v);
    return std::conj(a.z()) * b.z() + std::conj(a.w()) * b.w();
}

} // namespace

void KnotData::validate() const {
    if (p < 1) throw PreconditionError("knot order must be >= 1");
    if (p > 1 && std::gcd(mod(monodromy, p), p) != 1) throw PreconditionError("monodromy must be a unit in Z_p");
    if (sl % p != 0) throw PreconditionError("self-linking must be divisible by p");
}

PDisk::PDisk(LensParams lens, DiskAxis axis, double blend_lo, double blend_hi)
    : lens_(LensParams::make(lens.p, lens.q)), axis_(axis), lo_(blend_lo), hi_(blend_hi) {
    if (!(0 < lo_ && lo_ < hi_ && hi_ < 1)) throw PreconditionError("blend interval must satisfy 0 < lo < hi < 1");
}

double PDisk::profile(double r) const {
    if (r <= lo_) return r;
    const double outer = std::sin(pi * r / 2);
    if (r >= hi_) return outer;
    const double u = (r - lo_) / (hi_ - lo_);
    const double s = u * u * (3 - 2 * u);
    return (1 - s) * r + s * outer;
}

double PDisk::profile_derivative(double r) const {
    if (r <= lo_) return 1;
    const double douter = pi / 2 * std::cos(pi * r / 2);
    if (r >= hi_) return douter;
    const double u = (r - lo_) / (hi_ - lo_);
    const double s = u * u * (3 - 2 * u);
    const double ds = 6 * u * (1 - u) / (hi_ - lo_);
    return (1 - s) + s * douter + ds * (std::sin(pi * r / 2) - r);
}

double PDisk::profile_inverse(double f) const {
    if (!(f >= 0 && f <= 1)) throw PreconditionError("profile value outside [0,1]");
    double a = 0, b = 1;
    for (int i = 0; i < 200 && b - a > 1e-16; ++i) {
        const double m = (a + b) / 2;
        (profile(m) < f ? a : b) = m;
    }
    return (a + b) / 2;
}

namespace {

// Complement sqrt(1 - f^2) and its r-derivative, exact on the outer germ.
std::pair<double, double> complement(const PDisk& d, double r, double lo_outer) {
    const double f = d.profile(r);
    if (r >= lo_outer) return {std::cos(pi * r / 2), -pi / 2 * std::sin(pi * r / 2)};
    const double g = std::sqrt(std::max(0.0, 1 - f * f));
    return {g, -f * d.profile_derivative(r) / g};
}

Vec4 assemble(DiskAxis axis, cplx binding_plane, cplx other) {
    return axis == DiskAxis::Z ? Point4::from_complex(binding_plane, other).vec()
                               : Point4::from_complex(other, binding_plane).vec();
}

} // namespace

Point4 PDisk::point(double r, double theta) const {
    if (!(r >= 0 && r <= 1)) throw PreconditionError("disk radius must lie in [0,1]");
    const auto [g, dg] = complement(*this, r, hi_);
    (void)dg;
    return Point4::from_vec(assemble(axis_, std::polar(profile(r), theta), g));
}

Vec4 PDisk::d_r(double r, double theta) const {
    const auto [g, dg] = complement(*this, r, hi_);
    (void)g;
    return assemble(axis_, std::polar(profile_derivative(r), theta), dg);
}

Vec4 PDisk::d_theta(double r, double theta) const {
    return assemble(axis_, cplx(0, 1) * std::polar(profile(r), theta), 0.0);
}

std::pair<double, double> PDisk::coordinates(const Point4& pt) const {
    const cplx b = axis_ == DiskAxis::Z ? pt.z() : pt.w();
    const double f = std::min(1.0, std::abs(b));
    double th = std::arg(b);
    if (th < 0) th += 2 * pi;
    return {profile_inverse(f), th};
}

DiskPoint pdisk_point(const PDisk& disk, double r, double theta) {
    DiskPoint out;
    out.lift = disk.point(r, theta);
    const LensParams& l = disk.lens();
    const bool use_z = std::abs(out.lift.z()) > 1e-12;
    out.canonical = out.lift;
    for (int k = 0; k < l.p; ++k) {
        const Point4 img = deck_action(l, k, out.lift);
        double a = std::arg(use_z ? img.z() : img.w());
        if (a < -1e-12) a += 2 * pi;
        if (a < 2 * pi / l.p - 1e-12) {
            out.canonical = img;
            break;
        }
    }
    return out;
}

int monodromy_from_winding(int p, int w) {
    if (p < 1) throw PreconditionError("p must be >= 1");
    return mod(w, p);
}

int lens_binding_monodromy(const LensParams& lens) {
    const LensParams l = LensParams::make(lens.p, lens.q);
    return mod(-static_cast<long long>(l.q), l.p);
}

int self_linking_from_winding(int p, int wind) {
    if (p < 1) throw PreconditionError("p must be >= 1");
    return p * wind;
}

int binding_sl_winding(const PDisk& disk, int samples, double collar) {
    const double r = 1 - collar;
    std::vector<cplx> c(samples);
    for (int i = 0; i < samples; ++i) {
        const double th = 2 * pi * i / samples;
        const Point4 x = disk.point(r, th);
        const Vec4 n = disk.d_r(r, th);
        const Vec4 w = global_section(x);
        c[i] = hermitian(n, w);
    }
    try {
        return loop_winding(c, "self-linking collar");
    } catch (const RefinementRequired&) {
        if (samples > (1 << 20)) throw;
        return binding_sl_winding(disk, 4 * samples, collar);
    }
}

int binding_sl_numeric(const PDisk& disk, int samples, double collar) {
    return self_linking_from_winding(disk.lens().p, binding_sl_winding(disk, samples, collar));
}

int binding_sl_intersection(const PDisk& disk, double push, int samples) {
    const LensParams& l = disk.lens();
    const ContactSystem orient = ContactSystem::round();
    auto gamma = [&](double th) {
        const Point4 b = disk.point(1, th);
        return normalized(Point4::from_vec(b.vec() + push * global_section(b))).vec();
    };
    // Lifted page set: the p rotated copies of the disk, i.e. points whose
    // non-binding coordinate has argument in (2 pi / p) Z.
    auto other = [&](const Vec4& x) {
        const Point4 pt = Point4::from_vec(x);
        return disk.axis() == DiskAxis::Z ? pt.w() : pt.z();
    };
    auto level = [&](const Vec4& x) { return std::pow(other(x) / std::abs(other(x)), l.p); };
    int total = 0;
    const double h = 2 * pi / samples;
    cplx prev = level(gamma(0));
    for (int i = 1; i <= samples; ++i) {
        const double th = i * h;
        const cplx cur = level(gamma(th));
        if ((prev.imag() < 0) != (cur.imag() < 0) && prev.real() > 0 && cur.real() > 0) {
            double a = th - h, b = th;
            for (int it = 0; it < 60; ++it) {
                const double m = (a + b) / 2;
                ((level(gamma(m)).imag() < 0) == (prev.imag() < 0) ? a : b) = m;
            }
            const double tc = (a + b) / 2;
            const Vec4 x = gamma(tc);
            const Vec4 dg = (gamma(tc + 1e-6) - gamma(tc - 1e-6)) / 2e-6;
            // Move to the base copy of the disk by a deck transformation.
            const Point4 px = Point4::from_vec(x);
            int k0 = -1;
            for (int k = 0; k < l.p; ++k) {
                const cplx o = other(deck_push(l, k, x));
                if (o.real() > 0 && std::abs(std::arg(o)) < pi / l.p) {
                    k0 = k;
                    break;
                }
            }
            if (k0 < 0) throw NumericalError("intersection point not on a lifted page");
            const Point4 base = deck_action(l, k0, px);
            const auto [r, t] = disk.coordinates(base);
            const double vol =
                orient.volume(base.vec(), disk.d_r(r, t), disk.d_theta(r, t), deck_push(l, k0, dg));
            if (std::abs(vol) < 1e-12) throw DegenerateError("tangential intersection with the disk");
            total += vol > 0 ? 1 : -1;
        }
        prev = cur;
    }
    return total;
}

int binding_collar_winding(const PDisk& disk, int frame_shift, int samples, double collar) {
    const LensParams& l = disk.lens();
    const double r = 1 - collar;
    // Z_p-invariant normal coordinate of the binding.
    const int e = disk.axis() == DiskAxis::Z ? l.q : l.q_inverse();
    std::vector<cplx> c(samples);
    for (int i = 0; i < samples; ++i) {
        const double th = 2 * pi * i / samples;
        const Point4 x = disk.point(r, th);
        const cplx b = disk.axis() == DiskAxis::Z ? x.z() : x.w();
        const cplx n = disk.axis() == DiskAxis::Z ? x.w() : x.z();
        const cplx unit = std::conj(b) / std::abs(b);
        c[i] = n * std::pow(unit, l.p == 1 ? 1 : e) * std::polar(1.0, -static_cast<double>(frame_shift) * l.p * th);
    }
    return loop_winding(c, "monodromy collar");
}

int binding_monodromy_numeric(const PDisk& disk, int frame_shift) {
    return monodromy_from_winding(disk.lens().p, binding_collar_winding(disk, frame_shift));
}

long long slope_intersection(long long p, long long q, long long p2, long long q2) {
    const long long v = p2 * q - p * q2;
    return v < 0 ? -v : v;
}

namespace {
void check_pair(int p, int q1, int q2) {
    LensParams::make(p, q1);
    LensParams::make(p, q2);
}
} // namespace

bool lens_homeomorphic(int p, int q1, int q2) {
    check_pair(p, q1, q2);
    const int a = mod(q1, p), b = mod(q2, p);
    const int prod = mod(static_cast<long long>(q1) * q2, p);
    return a == b || a == mod(-b, p) || prod == mod(1, p) || prod == mod(-1, p);
}

bool lens_homotopy_equivalent(int p, int q1, int q2) {
    check_pair(p, q1, q2);
    if (p == 1) return true;
    const int a = mod(q1, p);
    for (long long k = 1; k < p; ++k) {
        const int v = mod(k * k * q2, p);
        if (a == v || a == mod(-v, p)) return true;
    }
    return false;
}

std::vector<int> coprime_residues(int p) {
    if (p < 1) throw PreconditionError("p must be >= 1");
    if (p == 1) return {1};
    std::vector<int> out;
    for (int q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) out.push_back(q);
    return out;
}

LensTables lens_tables(int p) {
    if (p < 2) throw PreconditionError("classification tables need p >= 2");
    LensTables t;
    t.p = p;
    t.residues = coprime_residues(p);
    const std::size_t n = t.residues.size();
    t.homeomorphic.assign(n, std::vector<bool>(n));
    t.homotopy_equivalent.assign(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t.homeomorphic[i][j] = lens_homeomorphic(p, t.residues[i], t.residues[j]);
            t.homotopy_equivalent[i][j] = lens_homotopy_equivalent(p, t.residues[i], t.residues[j]);
        }
    std::vector<bool> used(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<int> cls;
        for (std::size_t j = i; j < n; ++j)
            if (!used[j] && t.homeomorphic[i][j]) {
                used[j] = true;
                cls.push_back(t.residues[j]);
            }
        t.classes.push_back(std::move(cls));
    }
    return t;
}

} // namespace reebkit
