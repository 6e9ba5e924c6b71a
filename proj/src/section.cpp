#include "reebkit/section.hpp"

#include "reebkit/errors.hpp"
#include "reebkit/integrator.hpp"
#include "reebkit/parallel.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace reebkit {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2 * pi;

Vec4 rotate_w(const Vec4& v, double phase) {
    const cplx w = cplx(v[2], v[3]) * std::polar(1.0, phase);
    return {v[0], v[1], w.real(), w.imag()};
}

double wrap_angle(double a) {
    a = std::fmod(a, two_pi);
    return a < 0 ? a + two_pi : a;
}

struct GaussLegendre {
    explicit GaussLegendre(int n) : table(gsl_integration_glfixed_table_alloc(n), gsl_integration_glfixed_table_free), n(n) {
        if (!table) throw NumericalError("cannot allocate Gauss-Legendre table");
    }
    // i-th node and weight on [a, b].
    std::pair<double, double> node(double a, double b, int i) const {
        double x = 0, w = 0;
        gsl_integration_glfixed_point(a, b, i, &x, &w, table.get());
        return {x, w};
    }
    std::unique_ptr<gsl_integration_glfixed_table, void (*)(gsl_integration_glfixed_table*)> table;
    int n;
};

OdeRhs reeb_rhs(const ContactSystem& sys) {
    return [&sys](double, const State& x, State& dx) { dx = reeb_field(sys, Vec4(x)); };
}

void project_sphere(State& x) { x.normalize(); }

double max_prime_period(const ContactSystem& sys) {
    return std::max(sys.z_period(), sys.w_period()) / sys.order();
}

OdeOptions crossing_options(const Page& page, const ReturnOptions& opt) {
    const ContactSystem& sys = page.system();
    OdeOptions o;
    o.rtol = opt.rtol;
    o.atol = opt.atol;
    // keep p * arg(w) from advancing more than a quarter turn per step
    o.h_max = (pi / 4) / (sys.order() * std::max(sys.z_rate(), sys.w_rate()));
    o.h_init = o.h_max / 8;
    return o;
}

struct Crossing {
    double t = 0;
    Vec4 x;
};

// Refines a sign change of the page level between (ta, xa) and tb.
Crossing bisect(const Page& page, const OdeRhs& rhs, const OdeOptions& o, double ta, const Vec4& xa, double tb,
                double tol) {
    const double la = page.level(xa);
    double lo = ta, hi = tb;
    Vec4 xlo = xa;
    double tlo = ta;
    while (std::abs(hi - lo) > tol) {
        const double mid = (lo + hi) / 2;
        const Vec4 xm = integrate(rhs, State(xlo), tlo, mid, o, project_sphere).x;
        if ((page.level(xm) < 0) == (la < 0)) {
            lo = mid;
            xlo = xm;
            tlo = mid;
        } else {
            hi = mid;
        }
    }
    const double t = (lo + hi) / 2;
    return {t, integrate(rhs, State(xlo), tlo, t, o, project_sphere).x};
}

} // namespace

// ---------------------------------------------------------------------------

Point4 Page::point(double r, double theta) const { return Point4::from_vec(rotate_w(disk_.point(r, theta).vec(), phase_)); }

Point4 Page::point_zeta(cplx zeta) const {
    const double n2 = std::norm(zeta);
    if (n2 > 1) throw PreconditionError("page coordinate outside the unit disk");
    return Point4::from_complex(zeta, std::polar(std::sqrt(1 - n2), phase_));
}

std::pair<Vec4, Vec4> Page::tangent_zeta(cplx zeta) const {
    const double g = std::sqrt(1 - std::norm(zeta));
    if (!(g > 0)) throw PreconditionError("page chart is singular on the binding");
    const cplx e = std::polar(1.0, phase_);
    const cplx du = -zeta.real() / g * e, dv = -zeta.imag() / g * e;
    return {Vec4(1, 0, du.real(), du.imag()), Vec4(0, 1, dv.real(), dv.imag())};
}

double Page::density(cplx zeta) const {
    const auto [du, dv] = tangent_zeta(zeta);
    return sys_.dlambda(point_zeta(zeta).vec(), du, dv);
}

double Page::level(const Vec4& x) const {
    const cplx w(x[2], x[3]);
    const double n = std::abs(w);
    if (n == 0) return 0;
    return std::pow(w / n * std::polar(1.0, -phase_), disk_.lens().p).imag();
}

bool Page::on_sheet(const Vec4& x) const {
    const cplx w(x[2], x[3]);
    const double n = std::abs(w);
    return n > 0 && std::pow(w / n * std::polar(1.0, -phase_), disk_.lens().p).real() > 0;
}

int Page::sheet_deck(const Point4& x) const {
    const LensParams& l = disk_.lens();
    if (l.p == 1) return 0;
    const double a = wrap_angle(std::arg(x.w()) - phase_);
    const int j = static_cast<int>(std::lround(a * l.p / two_pi)) % l.p;
    // deck k multiplies w by e^{2 pi i k q / p}; solve k q = -j (mod p)
    return static_cast<int>(((static_cast<long long>(-j) * l.q_inverse()) % l.p + l.p) % l.p);
}

cplx Page::zeta_of(const Point4& x) const { return deck_action(disk_.lens(), sheet_deck(x), x).z(); }

std::pair<double, double> Page::coordinates(const Point4& x) const {
    const cplx z = zeta_of(x);
    return {radius_of(z), wrap_angle(std::arg(z))};
}

Page build_page(const ContactSystem& sys, double phase, int samples) {
    if (samples < 1) throw PreconditionError("transversality sample must be non-empty");
    Page page(sys, PDisk(sys.lens_or_trivial(), DiskAxis::Z), phase);
    const int n = std::max(1, static_cast<int>(std::lround(std::sqrt(samples))));
    double mn = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx zeta = std::polar(0.99 * (i + 0.5) / n, two_pi * j / n);
            const Point4 x = page.point_zeta(zeta);
            const auto [du, dv] = page.tangent_zeta(zeta);
            Eigen::Matrix<double, 4, 3> m;
            m << x.vec(), du, dv;
            const Eigen::Matrix4d q = Eigen::HouseholderQR<Eigen::Matrix<double, 4, 3>>(m).householderQ();
            const Vec4 r = reeb_field(sys, x.vec());
            mn = std::min(mn, std::abs(r.dot(q.col(3))) / r.norm());
        }
    if (!(mn > 0)) throw NumericalError("Reeb field is tangent to the page interior");
    page.min_transverse_ = mn;
    page.orientation_ = page.density({0.3, 0}) > 0 ? 1 : -1;
    return page;
}

std::string direction_name(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

// ---------------------------------------------------------------------------

ReturnRecord return_from(const Page& page, cplx zeta, Direction dir, const ReturnOptions& opt) {
    if (!(std::abs(zeta) < 1)) throw PreconditionError("return map needs an interior page point");
    const ContactSystem& sys = page.system();
    const OdeRhs rhs = reeb_rhs(sys);
    const OdeOptions o = crossing_options(page, opt);
    const double sign = dir == Direction::Forward ? 1 : -1;
    const double budget = opt.budget_factor * max_prime_period(sys);
    const Vec4 x0 = page.point_zeta(zeta).vec();

    std::optional<Crossing> hit;
    auto observe = [&](double ta, const State& xa, double tb, const State& xb) {
        const double la = page.level(xa), lb = page.level(xb);
        if (ta == 0 && std::abs(la) < 1e-12) return false;
        if ((la < 0) == (lb < 0) || !page.on_sheet(xa) || !page.on_sheet(xb)) return false;
        hit = bisect(page, rhs, o, ta, xa, tb, opt.tol);
        return true;
    };
    integrate(rhs, State(x0), 0, sign * budget, o, project_sphere, observe);
    if (!hit) {
        std::ostringstream os;
        os << "return failure: no " << direction_name(dir) << " page crossing within time " << budget;
        throw ReturnFailure(os.str());
    }

    ReturnRecord rec;
    rec.direction = dir;
    rec.zeta0 = zeta;
    rec.r0 = page.radius_of(zeta);
    rec.theta0 = wrap_angle(std::arg(zeta));
    rec.return_time = std::abs(hit->t);
    rec.landing = Point4::from_vec(hit->x);
    if (std::abs(page.level(hit->x)) > 1e-8) throw NumericalError("return point is off the page");
    rec.deck = page.sheet_deck(rec.landing);
    rec.zeta1 = page.zeta_of(rec.landing);
    if (!(std::abs(rec.zeta1) < 1)) throw NumericalError("return point reached the binding");
    rec.r1 = page.radius_of(rec.zeta1);
    rec.theta1 = wrap_angle(std::arg(rec.zeta1));
    return rec;
}

ReturnRecord return_map(const Page& page, double r, double theta, Direction dir, const ReturnOptions& opt) {
    if (!(r > 0 && r < 1)) throw PreconditionError("return map start must satisfy 0 < r < 1");
    ReturnRecord rec = return_from(page, std::polar(page.disk().profile(r), theta), dir, opt);
    rec.r0 = r;
    rec.theta0 = wrap_angle(theta);
    return rec;
}

FixedPoint fixed_point(const Page& page, double tol, cplx start, const ReturnOptions& opt) {
    auto displacement = [&](cplx z) {
        const ReturnRecord r = return_from(page, z, Direction::Forward, opt);
        return std::pair{Vec2((r.zeta1 - z).real(), (r.zeta1 - z).imag()), r.return_time};
    };
    constexpr double h = 1e-5;
    FixedPoint out;
    cplx z = start;
    auto [f, t] = displacement(z);
    out.trace.push_back(f.norm());
    for (int it = 0; it < 50 && f.norm() >= tol; ++it) {
        Eigen::Matrix2d jac;
        for (int c = 0; c < 2; ++c) {
            const cplx d = c == 0 ? cplx(h, 0) : cplx(0, h);
            jac.col(c) = (displacement(z + d).first - displacement(z - d).first) / (2 * h);
        }
        const Vec2 step = -jac.fullPivLu().solve(f);
        double damp = 1;
        cplx zn;
        std::pair<Vec2, double> fn;
        for (;;) {
            zn = z + damp * cplx(step[0], step[1]);
            if (std::abs(zn) < 0.98) {
                fn = displacement(zn);
                if (fn.first.norm() < f.norm()) break;
            }
            damp /= 2;
            if (damp < 1e-4) {
                std::ostringstream os;
                os << "fixed point search stalled; displacement trace:";
                for (double v : out.trace) os << ' ' << v;
                throw NumericalError(os.str());
            }
        }
        z = zn;
        f = fn.first;
        t = fn.second;
        out.trace.push_back(f.norm());
        out.iterations = it + 1;
    }
    if (!(f.norm() < tol)) {
        std::ostringstream os;
        os << "fixed point search did not converge; displacement trace:";
        for (double v : out.trace) os << ' ' << v;
        throw NumericalError(os.str());
    }
    out.zeta = z;
    out.r = page.radius_of(z);
    out.theta = wrap_angle(std::arg(z));
    out.displacement = f.norm();
    out.return_time = t;
    return out;
}

// ---------------------------------------------------------------------------

int signed_crossings(const Page& page, const Point4& x, double duration, const ReturnOptions& opt) {
    if (!(duration > 0)) throw PreconditionError("crossing count needs a positive duration");
    const ContactSystem& sys = page.system();
    const OdeRhs rhs = reeb_rhs(sys);
    const OdeOptions o = crossing_options(page, opt);
    const LensParams& l = page.disk().lens();
    int total = 0;
    auto observe = [&](double ta, const State& xa, double tb, const State& xb) {
        const double la = page.level(xa), lb = page.level(xb);
        if (ta == 0 && std::abs(la) < 1e-12) return false;
        if ((la < 0) == (lb < 0) || !page.on_sheet(xa) || !page.on_sheet(xb)) return false;
        const Crossing c = bisect(page, rhs, o, ta, xa, tb, opt.tol);
        const Point4 pt = Point4::from_vec(c.x);
        const int k = page.sheet_deck(pt);
        const Point4 base = deck_action(l, k, pt);
        const Vec4 vel = deck_push(l, k, reeb_field(sys, c.x));
        const auto [du, dv] = page.tangent_zeta(base.z());
        const double vol = sys.volume(base.vec(), vel, du, dv);
        if (std::abs(vol) < 1e-10) throw DegenerateError("tangential crossing of the page");
        total += (vol > 0 ? 1 : -1) * page.orientation();
        return false;
    };
    integrate(rhs, State(x.vec()), 0, duration, o, project_sphere, observe);
    return total;
}

int linking_with_binding(const ClosedOrbit& orbit, const Page& page, const ReturnOptions& opt) {
    double far = 0, t_start = 0;
    for (int i = 0; i < 64; ++i) {
        const double t = orbit.prime_period * i / 64;
        const Point4 x = orbit.at(t);
        if (std::abs(x.w()) < 1e-6) throw PreconditionError("orbit meets the binding");
        const double lv = std::abs(page.level(x.vec()));
        if (lv > far) {
            far = lv;
            t_start = t;
        }
    }
    return signed_crossings(page, orbit.at(t_start), orbit.period(), opt);
}

// ---------------------------------------------------------------------------

AreaIntegral page_area(const Page& page, int nodes_r, int nodes_theta) {
    const PDisk& d = page.disk();
    const ContactSystem& sys = page.system();
    const GaussLegendre gl(nodes_r);
    const double panels[4] = {0, d.blend_lo(), d.blend_hi(), 1};
    AreaIntegral out;
    out.min_density = std::numeric_limits<double>::infinity();
    out.max_density = -std::numeric_limits<double>::infinity();
    const double dth = two_pi / nodes_theta;
    for (int pnl = 0; pnl < 3; ++pnl)
        for (int i = 0; i < nodes_r; ++i) {
            const auto [r, wr] = gl.node(panels[pnl], panels[pnl + 1], i);
            for (int j = 0; j < nodes_theta; ++j) {
                const double th = j * dth;
                const Vec4 x = page.point(r, th).vec();
                const double v =
                    sys.dlambda(x, rotate_w(d.d_r(r, th), page.phase()), rotate_w(d.d_theta(r, th), page.phase()));
                out.signed_value += wr * dth * v;
                out.absolute += wr * dth * std::abs(v);
                out.min_density = std::min(out.min_density, v / r);
                out.max_density = std::max(out.max_density, v / r);
            }
        }
    return out;
}

double disk_area_bound(const Page& page) {
    const double coarse = page_area(page, 16, 32).absolute;
    const double fine = page_area(page, 32, 64).absolute;
    if (std::abs(fine - coarse) > 1e-6 * std::abs(fine)) {
        std::ostringstream os;
        os << "area quadrature did not converge (" << coarse << " vs " << fine << ")";
        throw NumericalError(os.str());
    }
    return 1 + fine;
}

namespace {

cplx bilinear(const std::array<cplx, 4>& c, double s, double t) {
    return (1 - s) * (1 - t) * c[0] + s * (1 - t) * c[1] + s * t * c[2] + (1 - s) * t * c[3];
}

double bilinear_jacobian(const std::array<cplx, 4>& c, double s, double t) {
    const cplx ds = (1 - t) * (c[1] - c[0]) + t * (c[2] - c[3]);
    const cplx dt = (1 - s) * (c[3] - c[0]) + s * (c[2] - c[1]);
    return ds.real() * dt.imag() - ds.imag() * dt.real();
}

template <class F>
double quad_integral(const std::array<cplx, 4>& corners, int nodes, F&& f) {
    const GaussLegendre gl(nodes);
    double total = 0;
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) {
            const auto [s, ws] = gl.node(0, 1, i);
            const auto [t, wt] = gl.node(0, 1, j);
            total += ws * wt * bilinear_jacobian(corners, s, t) * f(bilinear(corners, s, t));
        }
    return total;
}

} // namespace

double quad_area(const Page& page, const std::array<cplx, 4>& corners, int nodes) {
    return quad_integral(corners, nodes, [&](cplx z) { return page.density(z); });
}

double quad_image_area(const Page& page, const std::array<cplx, 4>& corners, int nodes, const ReturnOptions& opt) {
    constexpr double h = 1e-4;
    auto image = [&](cplx z) { return return_from(page, z, Direction::Forward, opt).zeta1; };
    return quad_integral(corners, nodes, [&](cplx z) {
        const cplx du = (image(z + h) - image(z - h)) / (2 * h);
        const cplx dv = (image(z + cplx(0, h)) - image(z - cplx(0, h))) / (2 * h);
        const double det = du.real() * dv.imag() - du.imag() * dv.real();
        return page.density(image(z)) * det;
    });
}

// ---------------------------------------------------------------------------

bool Main3Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> Main3Report::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

Main3Report verify_main3(const ContactSystem& sys, const Main3Options& opt) {
    if (sys.family() != Family::Ellipsoid) throw DegenerateError("degenerate: orbit families not isolated");
    if (!(opt.C > 0) || opt.samples < 0 || opt.quads < 0) throw PreconditionError("invalid verification options");
    Main3Report rep;
    rep.lens = sys.lens_or_trivial();
    rep.a = sys.a();
    rep.b = sys.b();
    rep.options = opt;
    const int p = rep.lens.p;
    auto check = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, false, std::move(detail)});
    };
    auto skip = [&](std::string name) { rep.checks.push_back({std::move(name), true, true, "skipped (no samples)"}); };

    // binding: order-p rational unknot with sl = -p
    const PDisk disk(rep.lens, DiskAxis::Z);
    rep.sl = binding_sl_numeric(disk);
    rep.monodromy = binding_monodromy_numeric(disk);
    {
        bool ok = true;
        std::string detail = "monodromy " + std::to_string(rep.monodromy) + " in Z_" + std::to_string(p);
        try {
            KnotData{p, rep.monodromy, rep.sl}.validate();
        } catch (const PreconditionError& e) {
            ok = false;
            detail = e.what();
        }
        check("p_unknotted", ok, detail);
    }
    check("self_linking", rep.sl == -p, "sl = " + std::to_string(rep.sl) + ", expected " + std::to_string(-p));

    const ClosedOrbit k = principal_orbit(sys, Principal::K);
    const OrbitIndex kp = orbit_index(k, p);
    rep.mu_binding = kp.mu;
    rep.mu_binding_spectral = kp.mu_spectral;
    rep.rho_binding = kp.rho;
    rep.binding_degenerate = kp.degenerate;
    check("binding_index", !kp.degenerate && kp.mu >= 3 && kp.mu == kp.mu_spectral,
          "mu_CZ(K^" + std::to_string(p) + ") = " + std::to_string(kp.mu) + " (spectral " +
              std::to_string(kp.mu_spectral) + ")" + (kp.degenerate ? ", degenerate" : ""));

    // catalogued orbits up to the action cutoff
    const Page page = build_page(sys, 0);
    const std::vector<ClosedOrbit> cat = catalog(sys, opt.C);
    rep.orbits = parallel_map(cat.size(), opt.jobs, [&](std::size_t i) {
        const ClosedOrbit& o = cat[i];
        OrbitEntry e;
        e.name = principal_name(o.which);
        e.multiplicity = o.multiplicity;
        e.period = o.period();
        e.contractible = o.closes_on_lift();
        if (e.contractible) {
            OrbitIndexOptions io;
            io.spectral = false;
            const OrbitIndex idx = orbit_index(principal_orbit(sys, o.which), o.multiplicity, io);
            e.rho = idx.rho;
            e.mu = idx.mu;
        }
        if (o.which != Principal::K) e.linking = linking_with_binding(o, page);
        return e;
    });
    bool link_ok = true;
    int linked = 0;
    for (const auto& e : rep.orbits) {
        if (e.contractible && e.rho && std::abs(*e.rho - 1) < 1e-6) rep.pstar.push_back(e);
        if (e.linking) {
            ++linked;
            link_ok = link_ok && *e.linking > 0;
        }
    }
    {
        bool ok = true;
        for (const auto& e : rep.pstar) ok = ok && e.linking && *e.linking > 0;
        std::ostringstream os;
        os << rep.pstar.size() << " contractible orbit(s) with rho = 1 up to action " << opt.C;
        if (rep.pstar.empty()) os << " (condition vacuous)";
        check("pstar_linking", ok, os.str());
    }
    {
        std::ostringstream os;
        os << linked << " catalogued orbit(s) off the binding up to action " << opt.C;
        check("linking_positive", link_ok, os.str());
    }

    // page geometry
    rep.min_transverse = page.min_transverse();
    check("transversality", rep.min_transverse > 0, "min transverse component " + std::to_string(rep.min_transverse));
    rep.area = page_area(page, 32, 64);
    {
        const GaussLegendre gl(32);
        double action = 0;
        for (int i = 0; i < 32; ++i) {
            const auto [th, w] = gl.node(0, two_pi, i);
            action += w * sys.lambda(page.point(1, th).vec(), rotate_w(disk.d_theta(1, th), page.phase()));
        }
        rep.boundary_action = action;
    }
    rep.disk_area_bound = disk_area_bound(page);
    {
        const bool single = rep.area.min_density > 0 || rep.area.max_density < 0;
        const bool stokes = std::abs(rep.area.signed_value - rep.boundary_action) <= 1e-8 * std::abs(rep.boundary_action);
        std::ostringstream os;
        os << "int dlambda = " << rep.area.signed_value << ", boundary action = " << rep.boundary_action;
        check("stokes_positivity", single && rep.area.signed_value > 0 && stokes, os.str());
    }

    // dynamics
    if (opt.samples == 0) {
        rep.dynamics_skipped = true;
        skip("gss_returns");
        skip("fixed_point");
        skip("area_preservation");
        return rep;
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<std::pair<double, double>> starts(opt.samples);
    for (auto& s : starts) {
        double r2 = 0;
        while (r2 == 0) r2 = unit(rng);
        s = {std::sqrt(r2), two_pi * unit(rng)};
    }
    rep.samples = parallel_map(starts.size(), opt.jobs, [&](std::size_t i) {
        GssSample g;
        g.r = starts[i].first;
        g.theta = starts[i].second;
        for (Direction d : {Direction::Forward, Direction::Backward}) try {
                (d == Direction::Forward ? g.forward : g.backward) = return_map(page, g.r, g.theta, d);
            } catch (const ReturnFailure&) {
            }
        return g;
    });
    for (const auto& g : rep.samples) {
        rep.forward_returns += g.forward.has_value();
        rep.backward_returns += g.backward.has_value();
    }
    check("gss_returns", rep.forward_returns == opt.samples && rep.backward_returns == opt.samples,
          std::to_string(rep.forward_returns) + "/" + std::to_string(opt.samples) + " forward, " +
              std::to_string(rep.backward_returns) + "/" + std::to_string(opt.samples) + " backward");

    try {
        rep.fixed = fixed_point(page, opt.fixed_point_tol);
        rep.fixed_center_distance = std::abs(rep.fixed->zeta);
        check("fixed_point", true,
              "displacement " + std::to_string(rep.fixed->displacement) + ", return time " +
                  std::to_string(rep.fixed->return_time));
    } catch (const NumericalError& e) {
        check("fixed_point", false, e.what());
    }

    std::vector<std::array<cplx, 4>> quads(opt.quads);
    for (auto& q : quads) {
        const cplx c = std::polar(0.8 * std::sqrt(unit(rng)), two_pi * unit(rng));
        const double rot = two_pi * unit(rng);
        for (int j = 0; j < 4; ++j) q[j] = c + std::polar(0.025 * std::sqrt(2.0), rot + pi / 4 + j * pi / 2);
    }
    const std::vector<double> distortion = parallel_map(quads.size(), opt.jobs, [&](std::size_t i) {
        const double a0 = quad_area(page, quads[i]);
        return std::abs(quad_image_area(page, quads[i]) - a0) / std::abs(a0);
    });
    for (double d : distortion) rep.max_area_distortion = std::max(rep.max_area_distortion, d);
    {
        std::ostringstream os;
        os << "max relative dlambda-area distortion " << rep.max_area_distortion << " over " << quads.size()
           << " quadrilaterals";
        check("area_preservation", rep.max_area_distortion < opt.area_tol, os.str());
    }
    return rep;
}

} // namespace reebkit
