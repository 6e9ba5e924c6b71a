#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebkit/errors.hpp"
#include "reebkit/index.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace reebkit;
using namespace reebkit::testing;
using std::numbers::pi;

namespace {

// mu-tilde straight from the two-case definition, applied to J - eps.
int mu_tilde_naive(double lo, double hi) {
    const double eps = 1e-9;
    lo -= eps;
    hi -= eps;
    for (int k = -50; k <= 50; ++k)
        if (lo <= k && k <= hi) return 2 * k;
    for (int k = -50; k <= 50; ++k)
        if (k < lo && hi < k + 1) return 2 * k + 1;
    return 1000;
}

SymplecticPath hyperbolic(double l) {
    return SymplecticPath::from_function(
        [l](double t) {
            Mat2 m;
            m << std::exp(l * t), 0, 0, std::exp(-l * t);
            return m;
        },
        256);
}

} // namespace

TEST_CASE("mu_tilde examples") {
    CHECK(mu_tilde(0.3, 0.6) == 1);
    CHECK(mu_tilde(-0.2, 0.2) == 0);
    CHECK(mu_tilde(1.0, 1.3) == 2);
    CHECK(mu_tilde(0.7, 1.0) == 1);
    CHECK(mu_tilde(-0.6, -0.3) == -1);
    CHECK(mu_tilde(1.5, 1.5) == 3);
    CHECK_THROWS_AS(mu_tilde(0.0, 0.5), PreconditionError);
    CHECK_THROWS_AS(mu_tilde(0.4, 0.1), PreconditionError);
}

TEST_CASE("mu_tilde agrees with the shifted two-case definition") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> c(-6, 6), len(0, 0.49);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < 2000; ++i) {
        double lo = c(rng), hi = lo + len(rng);
        switch (pick(rng)) {
        case 1: lo = std::round(lo); hi = lo + len(rng); break;
        case 2: hi = std::round(hi); lo = hi - len(rng); break;
        case 3: lo = hi = std::round(lo) + (pick(rng) % 2) * 0.5; break;
        default: break;
        }
        CHECK(mu_tilde(lo, hi) == mu_tilde_naive(lo, hi));
    }
}

TEST_CASE("delta_phi on rotations and hyperbolic paths") {
    std::mt19937_64 rng(22);
    std::normal_distribution<double> g;
    for (int i = 0; i < 10; ++i) {
        const Vec2 z(g(rng), g(rng));
        CHECK(delta_phi(SymplecticPath::rotation_path(pi), z) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(delta_phi(SymplecticPath::rotation_path(3 * pi), z) == doctest::Approx(1.5).epsilon(1e-12));
    }
    CHECK(delta_phi(hyperbolic(1.0), Vec2(1, 0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(delta_phi(SymplecticPath::rotation_path(40 * pi, 64), Vec2(1, 0)), RefinementRequired);
    CHECK_THROWS_AS(delta_phi(SymplecticPath::rotation_path(pi), Vec2(0, 0)), PreconditionError);
}

TEST_CASE("path validation") {
    std::vector<Mat2> shortp(10, Mat2::Identity());
    CHECK_THROWS_AS(SymplecticPath{shortp}, PreconditionError);
    std::vector<Mat2> bad(65, Mat2::Identity());
    bad[3] *= 2;
    CHECK_THROWS_AS(SymplecticPath{bad}, PreconditionError);
    std::vector<Mat2> notid(65, Mat2::Identity());
    notid[0](0, 1) = 1e-6;
    CHECK_THROWS_AS(SymplecticPath{notid}, PreconditionError);
    std::vector<Mat2> asym(8, Mat2::Identity());
    asym[2](0, 1) = 0.1;
    CHECK_THROWS_AS(SymmetricLoop{asym}, PreconditionError);
}

TEST_CASE("geometric index examples") {
    CHECK(cz_geometric(SymplecticPath::rotation_path(pi)).mu == 1);
    CHECK(cz_geometric(SymplecticPath::rotation_path(3 * pi)).mu == 3);
    CHECK(cz_geometric(SymplecticPath::rotation_path(-pi)).mu == -1);
    const auto h = cz_geometric(hyperbolic(0.8));
    CHECK(h.mu == 0);
    CHECK_FALSE(h.degenerate);
    CHECK(h.lo < 0);
    CHECK(h.hi > 0);
    const auto d = cz_geometric(SymplecticPath::rotation_path(2 * pi));
    CHECK(d.degenerate);
    CHECK(d.mu == 1);  // left-shift limit of {1}
    // negative hyperbolic: rotation by pi composed with a stretch
    const auto neg = SymplecticPath::from_function(
        [](double t) {
            Mat2 s;
            s << std::exp(0.5 * t), 0, 0, std::exp(-0.5 * t);
            return Mat2(rotation(pi * t) * s);
        },
        256);
    CHECK(cz_geometric(neg).mu == 1);
}

TEST_CASE("winding interval of an elliptic path stays inside one unit interval") {
    const Mat2 s = sym(3.0, 0.7, 2.0);
    const auto p = SymplecticPath::from_generator([&](double) { return s; }, 256);
    const auto gi = winding_interval(p);
    CHECK(gi.hi - gi.lo < 0.5);
    CHECK(std::floor(gi.lo) == std::floor(gi.hi));
}

TEST_CASE("spectrum of constant loops") {
    SUBCASE("S = pi I") {
        const auto sd = spectrum(SymmetricLoop::constant(pi * Mat2::Identity()), 2);
        REQUIRE(sd.eigenpairs.size() == 8);
        for (const auto& e : sd.eigenpairs) {
            const double k = (e.nu + pi) / (2 * pi);
            CHECK(std::abs(k - std::round(k)) < 1e-9);
            CHECK(e.wind == std::lround(k));
            CHECK(e.min_amplitude > 0.1);
        }
        CHECK(sd.wind_neg == 0);
        CHECK(sd.wind_nonneg == 1);
        CHECK(sd.parity == 1);
        CHECK_FALSE(sd.degenerate);
        CHECK(sd.mu() == 1);
    }
    SUBCASE("S = 3 pi I") {
        const auto sd = spectrum(SymmetricLoop::constant(3 * pi * Mat2::Identity()), 3);
        CHECK(sd.wind_neg == 1);
        CHECK(sd.wind_nonneg == 2);
        CHECK(sd.parity == 1);
        CHECK(cz_spectral(SymmetricLoop::constant(3 * pi * Mat2::Identity())).mu == 3);
    }
    SUBCASE("S = 0 is degenerate") {
        const auto sd = spectrum(SymmetricLoop::constant(Mat2::Zero()), 2);
        CHECK(sd.degenerate);
        CHECK(cz_spectral(SymmetricLoop::constant(Mat2::Zero())).degenerate);
    }
    SUBCASE("S = -pi I") { CHECK(cz_spectral(SymmetricLoop::constant(-pi * Mat2::Identity())).mu == -1); }
    SUBCASE("hyperbolic S = diag(1,-1)") {
        Mat2 s;
        s << 1, 0, 0, -1;
        const auto sd = spectrum(SymmetricLoop::constant(s), 2);
        CHECK(sd.mu() == 0);
        CHECK(sd.parity == 0);
    }
    CHECK_THROWS_AS(spectrum(SymmetricLoop::constant(Mat2::Identity()), 0), PreconditionError);
}

TEST_CASE("spectral windings are monotone and each level appears at most twice") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const TrigLoop l = TrigLoop::random(rng);
        const auto sd = spectrum(SymmetricLoop::from_function(l), 3);
        for (std::size_t k = 1; k < sd.eigenpairs.size(); ++k)
            CHECK(sd.eigenpairs[k - 1].wind <= sd.eigenpairs[k].wind);
        std::map<int, int> count;
        for (const auto& e : sd.eigenpairs) {
            ++count[e.wind];
            CHECK(e.min_amplitude > 1e-6);
        }
        for (const auto& [w, c] : count) CHECK(c <= 2);
    }
}

TEST_CASE("loop moments reproduce trigonometric coefficients") {
    std::mt19937_64 rng(24);
    const TrigLoop l = TrigLoop::random(rng);
    const auto s = SymmetricLoop::from_function(l, 64);
    CHECK((s.cos_moment(0) - l.s0).norm() < 1e-13);
    CHECK((2 * s.cos_moment(1) - l.a[0]).norm() < 1e-13);
    CHECK((2 * s.sin_moment(2) - l.b[1]).norm() < 1e-13);
    CHECK((2 * s.sin_moment(-2) + l.b[1]).norm() < 1e-13);
    CHECK(s.cos_moment(3).norm() < 1e-13);
    CHECK((s.eval(0.3141) - l(0.3141)).norm() < 1e-12);
}

TEST_CASE("rotation numbers") {
    for (double c : {pi, 0.7, 2.5 * pi, 5.1, -1.3}) {
        const auto r = rotation_number(SymplecticPath::rotation_path(c), 32);
        CHECK(r.rho == doctest::Approx(c / (2 * pi)).epsilon(1e-10));
        CHECK(std::abs(r.birkhoff - c / (2 * pi)) < 1e-9);
    }
    CHECK(std::abs(rotation_number(hyperbolic(1.2), 16).rho) < 1e-12);
    const auto p = SymplecticPath::rotation_path(2.2);
    for (int k = 1; k <= 5; ++k)
        CHECK(std::abs(rotation_number(p.iterate(k), 16).rho - k * rotation_number(p, 16).rho) < 1e-6);
    CHECK_THROWS_AS(rotation_number(p, 4), PreconditionError);
}

TEST_CASE("rotation number of a non-rigid path lies in the winding interval") {
    std::mt19937_64 rng(25);
    for (const auto& e : random_corpus(25, 10)) {
        const auto gi = winding_interval(e.path);
        const auto r = rotation_number(e.path, 64);
        CHECK(r.rho >= gi.lo - 1e-9);
        CHECK(r.rho <= gi.hi + 1e-9);
        CHECK(std::abs(r.birkhoff - r.rho) < 0.05);
    }
}

TEST_CASE("rho is the limit of mu(P^k) / 2k on rigid rotations") {
    for (double c : {0.9, 2.0, 4.4, 7.7}) {
        const auto p = SymplecticPath::rotation_path(c);
        const double rho = rotation_number(p, 16).rho;
        CHECK(std::abs(cz_geometric(p.iterate(8)).mu / 16.0 - rho) < 0.1);
    }
}

TEST_CASE("relative winding") {
    const int n = 200;
    std::vector<Vec2> z(n), w(n), e1(n), e3(n);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        z[i] = Vec2(0.3, -1.1);
        w[i] = rotation(2 * pi * t) * z[i];
        e1[i] = Vec2(std::cos(2 * pi * t), std::sin(2 * pi * t));
        e3[i] = Vec2(std::cos(6 * pi * t), std::sin(6 * pi * t));
    }
    CHECK(wind_relative(z, w) == 1);
    CHECK(wind_relative(z, z) == 0);
    CHECK(wind_relative(e1, e3) == 2);
    CHECK(wind_relative(e3, e1) == -2);
    std::vector<Vec2> zero = z;
    zero[5] = Vec2(0, 0);
    CHECK_THROWS_AS(wind_relative(zero, w), PreconditionError);
    FrameClass b{0}, b1{3}, b2{-2};
    CHECK(wind_between(b, b) == 0);
    CHECK(wind_between(b2, b) == wind_between(b2, b1) + wind_between(b1, b));
}

TEST_CASE("loop_from_path inverts the generator") {
    const auto r = loop_from_path(SymplecticPath::rotation_path(2.7));
    for (const auto& s : r.samples()) CHECK((s - 2.7 * Mat2::Identity()).norm() < 1e-8);
    std::vector<Mat2> id(129, Mat2::Identity());
    for (const auto& s : loop_from_path(SymplecticPath(id)).samples()) CHECK(s.norm() == 0);
    std::mt19937_64 rng(26);
    const TrigLoop l = TrigLoop::random(rng);
    const auto path = SymplecticPath::from_generator(l, 512, 8);
    const auto s = loop_from_path(path);
    for (int i = 0; i < s.size(); i += 17) CHECK((s[i] - l(static_cast<double>(i) / s.size())).norm() < 1e-6);
}

TEST_CASE("index axioms and definition agreement on random paths") {
    const auto corpus = random_corpus(27, 30);
    for (const auto& e : corpus) {
        const int mu_g = cz_geometric(e.path).mu;
        const auto sp = cz_spectral(SymmetricLoop::from_function(e.loop));
        CHECK_FALSE(sp.degenerate);
        CHECK(sp.mu == mu_g);

        const auto shifted = SymplecticPath::from_generator(maslov_shifted(e.loop), 256, 8);
        CHECK(cz_geometric(shifted).mu == mu_g + 2);
        CHECK(cz_geometric(e.path.left_multiply(SymplecticPath::rotation_path(2 * pi))).mu == mu_g + 2);
        CHECK(cz_spectral(SymmetricLoop::from_function(maslov_shifted(e.loop))).mu == mu_g + 2);

        CHECK(InverseTracker(e.loop).mu() == -mu_g);
        CHECK(cz_geometric(SymplecticPath::from_generator(reversed_inverse(e.loop), 256, 8)).mu == -mu_g);
        CHECK(cz_spectral(SymmetricLoop::from_function(reversed_inverse(e.loop))).mu == -mu_g);

        const double rho = rotation_number(e.path, 64).rho;
        CHECK((mu_g >= 3) == (rho > 1 + 1e-6));
        if (mu_g == 2) CHECK(std::abs(rho - 1) < 1e-6);
    }
}

TEST_CASE("small perturbations keep the index") {
    const auto corpus = random_corpus(28, 10);
    for (const auto& e : corpus) {
        const int mu = cz_geometric(e.path).mu;
        TrigLoop pert = e.loop;
        pert.s0 += sym(1e-4, -2e-4, 1e-4);
        const auto p2 = SymplecticPath::from_generator(pert, 256, 8);
        REQUIRE_FALSE(p2.degenerate());
        CHECK(cz_geometric(p2).mu == mu);
    }
}
