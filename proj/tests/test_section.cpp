#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebkit/errors.hpp"
#include "reebkit/section.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace reebkit;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

// Toric oracle: the return is the rotation of zeta by the z-angle accumulated
// in one w-turn of 2 pi / p, corrected by the deck element fixing the w-phase.
cplx closed_form_return(const ContactSystem& sys, cplx zeta) {
    const LensParams l = sys.lens_or_trivial();
    const double t = sys.w_period() / l.p;
    const double angle = sys.z_rate() * t - 2 * pi * (l.p == 1 ? 0 : l.q_inverse()) / l.p;
    return zeta * std::polar(1.0, angle);
}

ContactSystem l21() { return ContactSystem::ellipsoid(1, sqrt2, LensParams::make(2, 1)); }

} // namespace

TEST_CASE("page construction") {
    const Page page = build_page(l21());
    CHECK(page.min_transverse() > 0);
    CHECK(page.orientation() == 1);
    const Page s3 = build_page(ContactSystem::ellipsoid(1, sqrt2));
    CHECK(s3.disk().lens().p == 1);
    const Page round = build_page(ContactSystem::round(LensParams::make(2, 1)));
    CHECK(round.min_transverse() > 0);
    // binding of the page is the z-circle
    for (double th : {0.0, 1.0, 4.0}) CHECK(std::abs(page.point(1, th).w()) < 1e-15);
    // polar and graph charts agree
    for (double r : {0.1, 0.5, 0.9}) {
        const Point4 a = page.point(r, 0.7);
        const Point4 b = page.point_zeta(std::polar(page.disk().profile(r), 0.7));
        CHECK((a.vec() - b.vec()).norm() < 1e-14);
        const auto [r2, t2] = page.coordinates(a);
        CHECK(r2 == doctest::Approx(r).epsilon(1e-12));
        CHECK(t2 == doctest::Approx(0.7).epsilon(1e-12));
    }
}

TEST_CASE("pages are deck equivariant") {
    const auto sys = ContactSystem::ellipsoid(1, sqrt2, LensParams::make(5, 2));
    const Page a = build_page(sys, 0.4, 100);
    const Page b = build_page(sys, 0.4 + 2 * pi / 5, 100);
    for (double r : {0.2, 0.6})
        for (double th : {0.0, 2.5}) {
            const Point4 x = b.point(r, th);
            CHECK(std::abs(a.level(x.vec())) < 1e-14);
            CHECK(a.on_sheet(x.vec()));
            CHECK(lens_equivalent(sys.lens_or_trivial(), x, a.point_zeta(a.zeta_of(x))));
            CHECK(std::abs(std::abs(a.zeta_of(x)) - b.disk().profile(r)) < 1e-14);
        }
}

TEST_CASE("return map against the toric oracle") {
    for (auto sys : {l21(), ContactSystem::ellipsoid(1, sqrt2, LensParams::make(5, 2)),
                     ContactSystem::ellipsoid(std::numbers::phi, 1, LensParams::make(3, 2)),
                     ContactSystem::ellipsoid(1, sqrt2)}) {
        const Page page = build_page(sys, 0, 400);
        const double t = sys.w_period() / sys.order();
        for (double r : {1e-3, 0.3, 0.7, 0.95}) {
            const ReturnRecord rec = return_map(page, r, 1.1);
            CHECK(rec.return_time == doctest::Approx(t).epsilon(1e-9));
            const cplx expect = closed_form_return(sys, rec.zeta0);
            CHECK(std::abs(rec.zeta1 - expect) < 1e-8);
            CHECK(rec.r1 == doctest::Approx(r).epsilon(1e-8));
            CHECK(std::abs(page.level(rec.landing.vec())) < 1e-8);
            // back from the landing point
            const ReturnRecord back = return_from(page, rec.zeta1, Direction::Backward);
            CHECK(std::abs(back.zeta1 - rec.zeta0) < 1e-6);
            CHECK(back.return_time == doctest::Approx(t).epsilon(1e-9));
        }
    }
    const Page page = build_page(l21(), 0, 100);
    CHECK_THROWS_AS(return_map(page, 0, 0), PreconditionError);
    CHECK_THROWS_AS(return_map(page, 1, 0), PreconditionError);
}

TEST_CASE("round quotient returns in constant time") {
    for (int p : {1, 2, 3}) {
        const auto sys = ContactSystem::round(LensParams::make(p, 1));
        const Page page = build_page(sys, 0, 100);
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.05, 0.95), th(0, 2 * pi);
        for (int i = 0; i < 5; ++i) CHECK(return_map(page, u(rng), th(rng)).return_time == doctest::Approx(pi / p).epsilon(1e-9));
    }
}

TEST_CASE("return map commutes with deck relabeling") {
    const auto sys = ContactSystem::ellipsoid(1, sqrt2, LensParams::make(5, 2));
    const LensParams l = sys.lens_or_trivial();
    const Page a = build_page(sys, 0, 100);
    const Page b = build_page(sys, 2 * pi * l.q / 5, 100);  // deck_action(1) image of page a
    for (double r : {0.25, 0.8}) {
        const ReturnRecord ra = return_map(a, r, 0.9);
        const Point4 start_b = deck_action(l, 1, a.point(r, 0.9));
        const ReturnRecord rb = return_from(b, b.zeta_of(start_b), Direction::Forward);
        CHECK(rb.return_time == doctest::Approx(ra.return_time).epsilon(1e-9));
        CHECK(lens_equivalent(l, ra.landing, rb.landing, 1e-8));
    }
}

TEST_CASE("fixed point is the page center") {
    for (auto sys : {l21(), ContactSystem::ellipsoid(sqrt2, 1, LensParams::make(2, 1)),
                     ContactSystem::ellipsoid(1, sqrt2, LensParams::make(3, 1))}) {
        const Page page = build_page(sys, 0, 100);
        const FixedPoint f = fixed_point(page);
        CHECK(std::abs(f.zeta) < 1e-6);
        CHECK(f.displacement < 1e-9);
        CHECK(f.return_time == doctest::Approx(sys.w_period() / sys.order()).epsilon(1e-9));
        CHECK(f.trace.front() > f.trace.back());
    }
}

TEST_CASE("linking with the binding") {
    const auto sys = l21();
    const Page page = build_page(sys, 0, 100);
    const ClosedOrbit kp = principal_orbit(sys, Principal::KPrime);
    CHECK(linking_with_binding(kp, page) == 1);
    CHECK(linking_with_binding(kp.iterate(2), page) == 2);
    CHECK(linking_with_binding(kp.iterate(3), page) == 3);
    CHECK_THROWS_AS(linking_with_binding(principal_orbit(sys, Principal::K), page), PreconditionError);
    // sampled trajectories near the binding cross positively once per return time
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> th(0, 2 * pi);
    const double t = sys.w_period() / 2;
    for (int i = 0; i < 10; ++i) {
        const Point4 x = page.point(0.97 + 0.002 * i, th(rng));
        const Point4 y = flow(sys, x, 0.3 * t);
        const int n = signed_crossings(page, y, 3 * t);
        CHECK(n == 3);
    }
}

TEST_CASE("disk area constant") {
    for (int p : {1, 2, 3, 5}) {
        const auto sys = ContactSystem::round(LensParams::make(p, 1));
        const Page page = build_page(sys, 0, 100);
        // Stokes: the boundary covers the lifted circle of action pi once
        CHECK(disk_area_bound(page) == doctest::Approx(1 + pi).epsilon(1e-9));
        const AreaIntegral a = page_area(page);
        CHECK(a.min_density > 0);
        CHECK(a.signed_value == doctest::Approx(a.absolute).epsilon(1e-14));
    }
    const Page e = build_page(ContactSystem::ellipsoid(1, sqrt2, LensParams::make(2, 1)), 0, 100);
    CHECK(disk_area_bound(e) == doctest::Approx(2).epsilon(1e-9));
    CHECK(std::abs(page_area(e, 16, 32).absolute - page_area(e, 32, 64).absolute) < 1e-6);
}

TEST_CASE("return map preserves dlambda-area") {
    const Page page = build_page(l21(), 0, 100);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 4; ++i) {
        const cplx c = std::polar(0.8 * std::sqrt(u(rng)), 2 * pi * u(rng));
        const std::array<cplx, 4> q{c + cplx(-0.02, -0.03), c + cplx(0.03, -0.02), c + cplx(0.02, 0.025),
                                    c + cplx(-0.025, 0.02)};
        const double a0 = quad_area(page, q);
        CHECK(a0 > 0);
        CHECK(std::abs(quad_image_area(page, q) - a0) / a0 < 1e-4);
    }
}

TEST_CASE("verification report on L(2,1)") {
    Main3Options opt;
    opt.samples = 10;
    opt.quads = 3;
    const Main3Report rep = verify_main3(l21(), opt);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.sl == -2);
    CHECK(rep.mu_binding == 3);
    CHECK(rep.pstar.empty());
    CHECK(rep.forward_returns == 10);
    CHECK(rep.fixed_center_distance < 1e-6);
    CHECK(rep.disk_area_bound == doctest::Approx(2).epsilon(1e-9));

    // the long orbit as binding
    const Main3Report swapped = verify_main3(ContactSystem::ellipsoid(sqrt2, 1, LensParams::make(2, 1)), opt);
    CHECK(swapped.mu_binding == 5);
    CHECK(swapped.pass());

    Main3Options none = opt;
    none.samples = 0;
    none.C = 0.1;
    const Main3Report empty = verify_main3(l21(), none);
    CHECK(empty.dynamics_skipped);
    CHECK(empty.orbits.empty());
    CHECK(empty.pass());

    CHECK_THROWS_AS(verify_main3(ContactSystem::round(LensParams::make(2, 1))), DegenerateError);
}
