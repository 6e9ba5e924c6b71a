#pragma once

// Disk-like global surfaces of section of order p on L(p,q): pages of the
// open book with binding K = {w = 0}, first-return maps, their fixed point,
// linking with the binding, the area constant 1 + int |u0^* dlambda| and the
// numerical verifier assembling the conditions of the characterization.

#include "reebkit/errors.hpp"
#include "reebkit/geometry.hpp"
#include "reebkit/knots.hpp"
#include "reebkit/orbits.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reebkit {

/// No page crossing within the time budget.
class ReturnFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The page {arg w = phase} (mod 2 pi / p on the lift) of the open book
/// whose binding is the z-circle. In addition to the polar coordinates of
/// the p-disk, points are addressed by zeta = z on the base sheet: the page
/// is the graph {(zeta, sqrt(1 - |zeta|^2) e^{i phase}) : |zeta| < 1}.
class Page {
public:
    const ContactSystem& system() const { return sys_; }
    const PDisk& disk() const { return disk_; }
    double phase() const { return phase_; }
    /// Sign of dlambda on the oriented chart zeta = u + i v.
    int orientation() const { return orientation_; }
    /// Smallest |<R, n>| / |R| over the construction sample.
    double min_transverse() const { return min_transverse_; }

    Point4 point(double r, double theta) const;
    Point4 point_zeta(cplx zeta) const;
    /// d/du and d/dv of point_zeta.
    std::pair<Vec4, Vec4> tangent_zeta(cplx zeta) const;
    /// dlambda(d/du, d/dv) at zeta.
    double density(cplx zeta) const;

    /// Im((w e^{-i phase})^p) / |w|^p; zero on the lifted page set and its antipodal sheets.
    double level(const Vec4& x) const;
    /// Re((w e^{-i phase})^p) > 0, i.e. on a sheet of the page rather than between sheets.
    bool on_sheet(const Vec4& x) const;
    /// Deck element moving a point of the lifted page set onto the base sheet.
    int sheet_deck(const Point4& x) const;
    /// zeta of a point of the lifted page set.
    cplx zeta_of(const Point4& x) const;
    /// (r, theta) of a point of the lifted page set, theta in [0, 2 pi).
    std::pair<double, double> coordinates(const Point4& x) const;
    double radius_of(cplx zeta) const { return disk_.profile_inverse(std::min(1.0, std::abs(zeta))); }

private:
    friend Page build_page(const ContactSystem& sys, double phase, int samples);
    Page(ContactSystem sys, PDisk disk, double phase) : sys_(std::move(sys)), disk_(std::move(disk)), phase_(phase) {}

    ContactSystem sys_;
    PDisk disk_;
    double phase_;
    int orientation_ = 1;
    double min_transverse_ = 0;
};

/// Page at the given phase. Verifies transversality of the Reeb field on a
/// sample of `samples` interior points; throws NumericalError otherwise.
Page build_page(const ContactSystem& sys, double phase = 0, int samples = 10000);

enum class Direction { Forward, Backward };

std::string direction_name(Direction d);

struct ReturnRecord {
    double r0 = 0, theta0 = 0;
    double return_time = 0;
    double r1 = 0, theta1 = 0;
    Direction direction = Direction::Forward;
    cplx zeta0, zeta1;
    /// Landing point on the lift and the deck element bringing it to the base sheet.
    Point4 landing;
    int deck = 0;
};

struct ReturnOptions {
    /// Bisection tolerance for the crossing time.
    double tol = 1e-10;
    double rtol = 1e-12;
    double atol = 1e-12;
    /// Multiple of the largest principal period allowed before giving up.
    double budget_factor = 100;
};

/// First return to the page from the interior point zeta (|zeta| < 1).
ReturnRecord return_from(const Page& page, cplx zeta, Direction dir, const ReturnOptions& opt = {});

/// First return from polar coordinates; requires 0 < r < 1.
ReturnRecord return_map(const Page& page, double r, double theta, Direction dir = Direction::Forward,
                        const ReturnOptions& opt = {});

struct FixedPoint {
    double r = 0, theta = 0;
    cplx zeta;
    double displacement = 0;
    double return_time = 0;
    int iterations = 0;
    std::vector<double> trace;
};

/// Zero of the displacement zeta -> P(zeta) - zeta by damped Newton with a
/// finite-difference Jacobian, started at `start`.
FixedPoint fixed_point(const Page& page, double tol = 1e-9, cplx start = {0.3, 0.2}, const ReturnOptions& opt = {});

/// Signed crossings of the trajectory from x over [0, duration] through the
/// page, counted with the co-orientation lambda ^ dlambda. Throws
/// DegenerateError on a tangential crossing.
int signed_crossings(const Page& page, const Point4& x, double duration, const ReturnOptions& opt = {});

/// Linking number of a closed orbit with the binding: signed crossings over
/// one period. The orbit must avoid the binding.
int linking_with_binding(const ClosedOrbit& orbit, const Page& page, const ReturnOptions& opt = {});

struct AreaIntegral {
    /// int |u0^* dlambda| and int u0^* dlambda over the disk.
    double absolute = 0, signed_value = 0;
    /// Extremes of dlambda(d_r, d_theta) / r over the quadrature nodes.
    double min_density = 0, max_density = 0;
};

/// Gauss-Legendre in r on the three profile panels, trapezoid in theta.
AreaIntegral page_area(const Page& page, int nodes_r = 16, int nodes_theta = 32);

/// 1 + int |u0^* dlambda|, checked at two resolutions (relative gap < 1e-6).
double disk_area_bound(const Page& page);

/// dlambda-area of the bilinear quadrilateral with the given zeta corners.
double quad_area(const Page& page, const std::array<cplx, 4>& corners, int nodes = 6);
/// dlambda-area of its image under the forward return map, pulled back to
/// the quadrilateral: int rho(P(zeta)) det DP(zeta).
double quad_image_area(const Page& page, const std::array<cplx, 4>& corners, int nodes = 6,
                       const ReturnOptions& opt = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct OrbitEntry {
    std::string name;
    int multiplicity = 1;
    double period = 0;
    bool contractible = false;
    std::optional<double> rho;
    std::optional<int> mu;
    std::optional<int> linking;
};

struct GssSample {
    double r = 0, theta = 0;
    std::optional<ReturnRecord> forward, backward;
};

struct Main3Options {
    double C = 5;
    int samples = 100;
    int quads = 20;
    std::uint64_t seed = 1;
    int jobs = 1;
    double fixed_point_tol = 1e-9;
    double area_tol = 1e-4;
};

struct Main3Report {
    LensParams lens;
    double a = 0, b = 0;
    Main3Options options;

    int sl = 0;
    int monodromy = 0;
    int mu_binding = 0;
    int mu_binding_spectral = 0;
    double rho_binding = 0;
    bool binding_degenerate = false;

    /// Catalogued orbits up to C, with rho and index for the contractible ones.
    std::vector<OrbitEntry> orbits;
    /// Contractible orbits with rho = 1, whose linking with the binding must be positive.
    std::vector<OrbitEntry> pstar;

    double min_transverse = 0;
    AreaIntegral area;
    double boundary_action = 0;
    double disk_area_bound = 0;

    bool dynamics_skipped = false;
    std::vector<GssSample> samples;
    int forward_returns = 0, backward_returns = 0;
    std::optional<FixedPoint> fixed;
    double fixed_center_distance = 0;
    double max_area_distortion = 0;

    std::vector<CheckResult> checks;
    bool pass() const;
    std::vector<std::string> failures() const;
};

/// Runs every check on a quotient ellipsoid system. Failed checks are
/// recorded in the report rather than thrown.
Main3Report verify_main3(const ContactSystem& sys, const Main3Options& opt = {});

} // namespace reebkit
