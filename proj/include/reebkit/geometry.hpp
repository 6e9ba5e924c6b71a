#pragma once

// S^3 in C^2, the Liouville form, the toric ellipsoid family and the
// Z_p deck action defining L(p,q).

#include <Eigen/Dense>

#include <complex>
#include <optional>

namespace reebkit {

using cplx = std::complex<double>;
using Vec4 = Eigen::Vector4d;

/// Point of R^4 = C^2 with (z, w) = (x1 + i y1, x2 + i y2).
struct Point4 {
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

    static Point4 from_complex(cplx z, cplx w) { return {z.real(), z.imag(), w.real(), w.imag()}; }
    static Point4 from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

    cplx z() const { return {x1, y1}; }
    cplx w() const { return {x2, y2}; }
    Vec4 vec() const { return {x1, y1, x2, y2}; }
    double norm() const { return vec().norm(); }

    /// |z|^2 + |w|^2 = 1 within 1e-12.
    bool on_sphere(double tol = 1e-12) const { return std::abs(vec().squaredNorm() - 1.0) <= tol; }
};

/// Radial projection back onto S^3.
Point4 normalized(const Point4& pt);

/// Tangent vector attached to a base point of S^3.
struct Tangent4 {
    Point4 base;
    Vec4 v = Vec4::Zero();

    bool is_tangent(double tol = 1e-10) const;
};

/// Multiplication by i on C^2 in real coordinates.
inline Vec4 mul_i(const Vec4& v) { return {-v[1], v[0], -v[3], v[2]}; }

/// Standard symplectic form dx1^dy1 + dx2^dy2.
inline double omega(const Vec4& u, const Vec4& v) { return u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]; }

/// Global section (-conj(w), conj(z)) of the standard contact structure.
Vec4 global_section(const Point4& pt);

struct LensParams {
    int p = 1;
    int q = 1;

    /// Validates 1 <= q <= p and gcd(p, q) = 1.
    static LensParams make(int p, int q);

    /// Inverse of q modulo p (0 when p == 1).
    int q_inverse() const;

    bool operator==(const LensParams&) const = default;
};

enum class Family { Round, Ellipsoid };

/// Contact form on S^3 (optionally viewed on L(p,q) through its lifts).
///
/// The ellipsoid E(a,b) = {pi|z|^2/a + pi|w|^2/b = 1} is pulled back to the
/// unit sphere along rays, which yields lambda = lambda0 / H with
/// H = pi|z|^2/a + pi|w|^2/b. Its Reeb flow is the toric rotation
/// (e^{2 pi i t/a} z, e^{2 pi i t/b} w). The round form lambda0 itself is
/// the case H = |z|^2 + |w|^2, i.e. rotation rate 2 in both planes.
class ContactSystem {
public:
    static ContactSystem round(std::optional<LensParams> lens = std::nullopt);
    static ContactSystem ellipsoid(double a, double b, std::optional<LensParams> lens = std::nullopt);

    Family family() const { return family_; }
    /// Ellipsoid parameters; the round family reports (pi, pi).
    double a() const { return a_; }
    double b() const { return b_; }
    const std::optional<LensParams>& lens() const { return lens_; }
    /// Order of the deck group (1 on S^3).
    int order() const { return lens_ ? lens_->p : 1; }
    LensParams lens_or_trivial() const { return lens_.value_or(LensParams{1, 1}); }

    /// Angular speed of the Reeb rotation in the z- and w-planes.
    double z_rate() const;
    double w_rate() const;
    /// Period of the z-circle {w = 0} and w-circle {z = 0} on the lift.
    double z_period() const;
    double w_period() const;

    ContactSystem with_lens(std::optional<LensParams> lens) const;

    /// Conformal factor denominator H at pt (lambda = lambda0 / H).
    double normalizer(const Vec4& x) const;
    Vec4 normalizer_gradient(const Vec4& x) const;

    /// lambda_x(v).
    double lambda(const Vec4& x, const Vec4& v) const;
    /// d lambda_x(u, v).
    double dlambda(const Vec4& x, const Vec4& u, const Vec4& v) const;
    /// (lambda ^ d lambda)_x(u, v, w).
    double volume(const Vec4& x, const Vec4& u, const Vec4& v, const Vec4& w) const;

private:
    ContactSystem(Family f, double a, double b, std::optional<LensParams> lens);

    Family family_;
    double a_;
    double b_;
    std::optional<LensParams> lens_;
};

/// lambda0 = 1/2 (x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2) evaluated on a tangent vector.
double lambda0_eval(const Point4& pt, const Tangent4& v);

/// Reeb vector of the system at pt, obtained by solving i_R dlambda = 0,
/// lambda(R) = 1 in the tangent frame {i x, W, i W}.
Tangent4 reeb_vector(const ContactSystem& sys, const Point4& pt);

/// Reeb field for the radially projected point; smooth extension to R^4 \ {0}.
Vec4 reeb_field(const ContactSystem& sys, const Vec4& x);

/// Reeb flow by its closed form (toric rotation).
Point4 flow(const ContactSystem& sys, const Point4& pt, double t);

/// Reeb flow by adaptive Dormand-Prince integration of reeb_field with
/// projection to S^3 after every accepted step.
Point4 flow_integrated(const ContactSystem& sys, const Point4& pt, double t, double tol = 1e-10);

/// (e^{2 pi i k/p} z, e^{2 pi i k q/p} w), k taken mod p.
Point4 deck_action(const LensParams& lens, int k, const Point4& pt);

/// Linear part of deck_action, applied to a vector.
Vec4 deck_push(const LensParams& lens, int k, const Vec4& v);

/// True iff some deck power maps pt1 to pt2 within tol.
bool lens_equivalent(const LensParams& lens, const Point4& pt1, const Point4& pt2, double tol = 1e-9);

/// Smallest k in {0..p-1} with deck_action(k, pt1) ~ pt2, if any.
std::optional<int> deck_power_between(const LensParams& lens, const Point4& pt1, const Point4& pt2, double tol = 1e-9);

} // namespace reebkit
